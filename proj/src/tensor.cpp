#include "fibersynth/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fibersynth {

namespace {

size_t shape_numel(const std::vector<int>& s) {
    size_t n = 1;
    for (int d : s) {
        if (d <= 0) throw std::invalid_argument("tensor: non-positive dim");
        n *= static_cast<size_t>(d);
    }
    return n;
}

}  // namespace

Tensor::Tensor(std::vector<int> s) : shape(std::move(s)) {
    values.assign(shape_numel(shape), 0.0);
    grad.assign(values.size(), 0.0);
}

Tensor::Tensor(std::vector<int> s, std::vector<double> v) : shape(std::move(s)) {
    if (v.size() != shape_numel(shape))
        throw std::invalid_argument("tensor: data length does not match shape");
    values = std::move(v);
    grad.assign(values.size(), 0.0);
}

int Tensor::numel() const { return static_cast<int>(values.size()); }

void Tensor::zero_grad() { std::fill(grad.begin(), grad.end(), 0.0); }

void Tensor::fill(double v) { std::fill(values.begin(), values.end(), v); }

std::string Tensor::shape_str() const {
    std::string s = "(";
    for (size_t i = 0; i < shape.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(shape[i]);
    }
    return s + ")";
}

void require_shape(const Tensor& t, const std::vector<int>& expected,
                   const std::string& where) {
    if (t.shape == expected) return;
    std::string e = "(";
    for (size_t i = 0; i < expected.size(); ++i) {
        if (i) e += ",";
        e += std::to_string(expected[i]);
    }
    e += ")";
    throw std::invalid_argument(where + ": expected shape " + e + ", got " +
                                t.shape_str());
}

}  // namespace fibersynth
