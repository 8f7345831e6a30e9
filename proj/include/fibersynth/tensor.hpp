#pragma once

#include <string>
#include <vector>

namespace fibersynth {

// Dense N-d array with a paired gradient buffer of the same shape.
// Convolutional tensors use (channels, height, width) order.
struct Tensor {
    std::vector<int> shape;
    std::vector<double> values;
    std::vector<double> grad;

    Tensor() = default;
    explicit Tensor(std::vector<int> s);
    Tensor(std::vector<int> s, std::vector<double> v);

    int numel() const;
    int dim(int i) const { return shape[static_cast<size_t>(i)]; }
    int ndim() const { return static_cast<int>(shape.size()); }

    void zero_grad();
    void fill(double v);

    bool same_shape(const Tensor& other) const { return shape == other.shape; }
    std::string shape_str() const;
};

// Throws std::invalid_argument naming expected/actual on mismatch.
void require_shape(const Tensor& t, const std::vector<int>& expected,
                   const std::string& where);

}  // namespace fibersynth
