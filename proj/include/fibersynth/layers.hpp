#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fibersynth/rng.hpp"
#include "fibersynth/tensor.hpp"

namespace fibersynth {

// Layers are stateless between calls: forward is a pure function of
// (parameters, input); backward recomputes whatever it needs from the
// stored input, accumulates into the parameters' grad buffers and returns
// the gradient w.r.t. the input. That keeps inference on a frozen model
// safe to run from multiple threads while training stays single-owner.
class Layer {
public:
    virtual ~Layer() = default;
    virtual Tensor forward(const Tensor& input) const = 0;
    virtual Tensor backward(const Tensor& input, const Tensor& upstream) = 0;
    virtual std::vector<Tensor*> parameters() { return {}; }
    virtual std::vector<const Tensor*> parameters() const { return {}; }
    virtual std::string name() const = 0;
    // Glorot-uniform weights (+-sqrt(6/(fan_in+fan_out))), zero bias.
    virtual void init(SeededRng& rng) {}
};

using LayerPtr = std::unique_ptr<Layer>;

class Dense : public Layer {
public:
    Dense(int in_features, int out_features);
    Tensor forward(const Tensor& input) const override;
    Tensor backward(const Tensor& input, const Tensor& upstream) override;
    std::vector<Tensor*> parameters() override { return {&weight, &bias}; }
    std::vector<const Tensor*> parameters() const override { return {&weight, &bias}; }
    std::string name() const override { return "dense"; }
    void init(SeededRng& rng) override;

    int in_features, out_features;
    Tensor weight;  // (out, in)
    Tensor bias;    // (out)
};

// Cross-correlation with zero padding. Input (C,H,W), output (C',H',W')
// with H' = (H + 2*pad - k)/stride + 1.
class Conv2d : public Layer {
public:
    Conv2d(int in_ch, int out_ch, int kernel, int stride, int pad);
    Tensor forward(const Tensor& input) const override;
    Tensor backward(const Tensor& input, const Tensor& upstream) override;
    std::vector<Tensor*> parameters() override { return {&weight, &bias}; }
    std::vector<const Tensor*> parameters() const override { return {&weight, &bias}; }
    std::string name() const override { return "conv2d"; }
    void init(SeededRng& rng) override;

    std::vector<int> output_shape(const std::vector<int>& in) const;

    int in_ch, out_ch, kernel, stride, pad;
    Tensor weight;  // (out_ch, in_ch, k, k)
    Tensor bias;    // (out_ch)
};

// Adjoint of Conv2d: maps (C,H,W) up to (C',H',W') with
// H' = (H-1)*stride - 2*pad + k. Its forward is exactly the transpose of
// the matching conv's forward map, which the adjointness tests pin down.
class TConv2d : public Layer {
public:
    TConv2d(int in_ch, int out_ch, int kernel, int stride, int pad);
    Tensor forward(const Tensor& input) const override;
    Tensor backward(const Tensor& input, const Tensor& upstream) override;
    std::vector<Tensor*> parameters() override { return {&weight, &bias}; }
    std::vector<const Tensor*> parameters() const override { return {&weight, &bias}; }
    std::string name() const override { return "tconv2d"; }
    void init(SeededRng& rng) override;

    std::vector<int> output_shape(const std::vector<int>& in) const;

    int in_ch, out_ch, kernel, stride, pad;
    Tensor weight;  // (in_ch, out_ch, k, k)
    Tensor bias;    // (out_ch)
};

class LeakyRelu : public Layer {
public:
    explicit LeakyRelu(double slope = 0.2) : slope(slope) {}
    Tensor forward(const Tensor& input) const override;
    Tensor backward(const Tensor& input, const Tensor& upstream) override;
    std::string name() const override { return "leaky_relu"; }
    double slope;
};

class Relu : public Layer {
public:
    Tensor forward(const Tensor& input) const override;
    Tensor backward(const Tensor& input, const Tensor& upstream) override;
    std::string name() const override { return "relu"; }
};

class Sigmoid : public Layer {
public:
    Tensor forward(const Tensor& input) const override;
    Tensor backward(const Tensor& input, const Tensor& upstream) override;
    std::string name() const override { return "sigmoid"; }
};

class Tanh : public Layer {
public:
    Tensor forward(const Tensor& input) const override;
    Tensor backward(const Tensor& input, const Tensor& upstream) override;
    std::string name() const override { return "tanh"; }
};

// --- stack helpers -------------------------------------------------------

using LayerStack = std::vector<LayerPtr>;

Tensor stack_forward(const LayerStack& stack, const Tensor& x);

// Forward keeping every intermediate: trace[0] = x, trace[i+1] = layer_i out.
std::vector<Tensor> stack_forward_trace(const LayerStack& stack, const Tensor& x);

// Backward through the whole stack using a trace from stack_forward_trace.
Tensor stack_backward(LayerStack& stack, const std::vector<Tensor>& trace,
                      const Tensor& upstream);

std::vector<Tensor*> stack_parameters(LayerStack& stack);
void stack_init(LayerStack& stack, SeededRng& rng);

// Channel concat of (Ca,H,W) and (Cb,H,W) -> (Ca+Cb,H,W), and its adjoint.
Tensor concat_channels(const Tensor& a, const Tensor& b);
void split_channels(const Tensor& g, int c_first, Tensor& ga, Tensor& gb);

}  // namespace fibersynth
