#include "fibersynth/layers.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace fibersynth {

namespace {

// ---- small dense kernels ----
// All matrices row-major. These carry the whole training load, so they are
// written as saxpy/dot loops the compiler can vectorize.

// C[m x n] += A[m x k] * B[k x n]
void gemm_nn(int m, int k, int n, const double* A, const double* B, double* C) {
    for (int i = 0; i < m; ++i) {
        double* c = C + static_cast<size_t>(i) * n;
        const double* a = A + static_cast<size_t>(i) * k;
        for (int l = 0; l < k; ++l) {
            const double av = a[l];
            const double* b = B + static_cast<size_t>(l) * n;
            for (int j = 0; j < n; ++j) c[j] += av * b[j];
        }
    }
}

// C[m x n] += A[m x k] * B^T, with B stored [n x k]
void gemm_nt(int m, int k, int n, const double* A, const double* B, double* C) {
    for (int i = 0; i < m; ++i) {
        const double* a = A + static_cast<size_t>(i) * k;
        double* c = C + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) {
            const double* b = B + static_cast<size_t>(j) * k;
            double acc = 0.0;
            for (int l = 0; l < k; ++l) acc += a[l] * b[l];
            c[j] += acc;
        }
    }
}

int conv_out_dim(int in, int k, int s, int p) {
    return (in + 2 * p - k) / s + 1;
}

// col[(ic*k+ky)*k+kx][oy*OW+ox] = x[ic][oy*s+ky-p][ox*s+kx-p], 0 off-frame
void im2col(const double* x, int C, int H, int W, int k, int s, int p, int OH,
            int OW, double* col) {
    const int N = OH * OW;
    for (int ic = 0; ic < C; ++ic) {
        for (int ky = 0; ky < k; ++ky) {
            for (int kx = 0; kx < k; ++kx) {
                double* row = col + (static_cast<size_t>(ic) * k * k + ky * k + kx) * N;
                for (int oy = 0; oy < OH; ++oy) {
                    const int iy = oy * s + ky - p;
                    double* r = row + static_cast<size_t>(oy) * OW;
                    if (iy < 0 || iy >= H) {
                        std::memset(r, 0, sizeof(double) * OW);
                        continue;
                    }
                    const double* xr = x + (static_cast<size_t>(ic) * H + iy) * W;
                    for (int ox = 0; ox < OW; ++ox) {
                        const int ix = ox * s + kx - p;
                        r[ox] = (ix < 0 || ix >= W) ? 0.0 : xr[ix];
                    }
                }
            }
        }
    }
}

// adjoint of im2col: scatter-add columns back into the image
void col2im(const double* col, int C, int H, int W, int k, int s, int p, int OH,
            int OW, double* x) {
    const int N = OH * OW;
    std::memset(x, 0, sizeof(double) * C * H * W);
    for (int ic = 0; ic < C; ++ic) {
        for (int ky = 0; ky < k; ++ky) {
            for (int kx = 0; kx < k; ++kx) {
                const double* row =
                    col + (static_cast<size_t>(ic) * k * k + ky * k + kx) * N;
                for (int oy = 0; oy < OH; ++oy) {
                    const int iy = oy * s + ky - p;
                    if (iy < 0 || iy >= H) continue;
                    const double* r = row + static_cast<size_t>(oy) * OW;
                    double* xr = x + (static_cast<size_t>(ic) * H + iy) * W;
                    for (int ox = 0; ox < OW; ++ox) {
                        const int ix = ox * s + kx - p;
                        if (ix >= 0 && ix < W) xr[ix] += r[ox];
                    }
                }
            }
        }
    }
}

std::vector<double>& scratch(int which, size_t n) {
    thread_local std::vector<double> bufs[3];
    auto& b = bufs[which];
    if (b.size() < n) b.resize(n);
    return b;
}

double glorot_limit(int fan_in, int fan_out) {
    return std::sqrt(6.0 / (fan_in + fan_out));
}

void init_uniform(Tensor& t, SeededRng& rng, double limit) {
    for (auto& v : t.values) v = rng.uniform(-limit, limit);
}

}  // namespace

// ---- Dense ----

Dense::Dense(int in_f, int out_f)
    : in_features(in_f), out_features(out_f),
      weight({out_f, in_f}), bias({out_f}) {}

void Dense::init(SeededRng& rng) {
    init_uniform(weight, rng, glorot_limit(in_features, out_features));
    bias.fill(0.0);
}

Tensor Dense::forward(const Tensor& input) const {
    if (input.numel() != in_features)
        throw std::invalid_argument("dense: expected " +
                                    std::to_string(in_features) +
                                    " inputs, got " + input.shape_str());
    Tensor out({out_features});
    for (int o = 0; o < out_features; ++o) {
        const double* w = weight.values.data() + static_cast<size_t>(o) * in_features;
        double acc = bias.values[o];
        for (int i = 0; i < in_features; ++i) acc += w[i] * input.values[i];
        out.values[o] = acc;
    }
    return out;
}

Tensor Dense::backward(const Tensor& input, const Tensor& upstream) {
    if (upstream.numel() != out_features)
        throw std::invalid_argument("dense backward: upstream " +
                                    upstream.shape_str() + " does not match " +
                                    std::to_string(out_features) + " outputs");
    Tensor gx(input.shape);
    for (int o = 0; o < out_features; ++o) {
        const double g = upstream.values[o];
        bias.grad[o] += g;
        double* gw = weight.grad.data() + static_cast<size_t>(o) * in_features;
        const double* w = weight.values.data() + static_cast<size_t>(o) * in_features;
        for (int i = 0; i < in_features; ++i) {
            gw[i] += g * input.values[i];
            gx.values[i] += g * w[i];
        }
    }
    return gx;
}

// ---- Conv2d ----

Conv2d::Conv2d(int ic, int oc, int k, int s, int p)
    : in_ch(ic), out_ch(oc), kernel(k), stride(s), pad(p),
      weight({oc, ic, k, k}), bias({oc}) {}

void Conv2d::init(SeededRng& rng) {
    const int kk = kernel * kernel;
    init_uniform(weight, rng, glorot_limit(in_ch * kk, out_ch * kk));
    bias.fill(0.0);
}

std::vector<int> Conv2d::output_shape(const std::vector<int>& in) const {
    if (in.size() != 3 || in[0] != in_ch)
        throw std::invalid_argument("conv2d: expected (" +
                                    std::to_string(in_ch) + ",H,W) input");
    const int oh = conv_out_dim(in[1], kernel, stride, pad);
    const int ow = conv_out_dim(in[2], kernel, stride, pad);
    if (oh < 1 || ow < 1)
        throw std::invalid_argument("conv2d: input too small for kernel");
    return {out_ch, oh, ow};
}

Tensor Conv2d::forward(const Tensor& input) const {
    const auto os = output_shape(input.shape);
    const int H = input.shape[1], W = input.shape[2];
    const int OH = os[1], OW = os[2];
    const int K = in_ch * kernel * kernel, N = OH * OW;

    auto& col = scratch(0, static_cast<size_t>(K) * N);
    im2col(input.values.data(), in_ch, H, W, kernel, stride, pad, OH, OW,
           col.data());

    Tensor out(os);
    gemm_nn(out_ch, K, N, weight.values.data(), col.data(), out.values.data());
    for (int oc = 0; oc < out_ch; ++oc) {
        double* y = out.values.data() + static_cast<size_t>(oc) * N;
        const double b = bias.values[oc];
        for (int j = 0; j < N; ++j) y[j] += b;
    }
    return out;
}

Tensor Conv2d::backward(const Tensor& input, const Tensor& upstream) {
    const auto os = output_shape(input.shape);
    require_shape(upstream, os, "conv2d backward");
    const int H = input.shape[1], W = input.shape[2];
    const int OH = os[1], OW = os[2];
    const int K = in_ch * kernel * kernel, N = OH * OW;

    auto& col = scratch(0, static_cast<size_t>(K) * N);
    im2col(input.values.data(), in_ch, H, W, kernel, stride, pad, OH, OW,
           col.data());

    // d/d bias and d/d weight
    for (int oc = 0; oc < out_ch; ++oc) {
        const double* g = upstream.values.data() + static_cast<size_t>(oc) * N;
        double acc = 0.0;
        for (int j = 0; j < N; ++j) acc += g[j];
        bias.grad[oc] += acc;
    }
    gemm_nt(out_ch, N, K, upstream.values.data(), col.data(), weight.grad.data());

    // d/d input via transposed weight
    auto& wT = scratch(1, static_cast<size_t>(K) * out_ch);
    for (int oc = 0; oc < out_ch; ++oc)
        for (int r = 0; r < K; ++r)
            wT[static_cast<size_t>(r) * out_ch + oc] =
                weight.values[static_cast<size_t>(oc) * K + r];
    auto& gcol = scratch(2, static_cast<size_t>(K) * N);
    std::memset(gcol.data(), 0, sizeof(double) * K * N);
    gemm_nn(K, out_ch, N, wT.data(), upstream.values.data(), gcol.data());

    Tensor gx(input.shape);
    col2im(gcol.data(), in_ch, H, W, kernel, stride, pad, OH, OW,
           gx.values.data());
    return gx;
}

// ---- TConv2d ----

TConv2d::TConv2d(int ic, int oc, int k, int s, int p)
    : in_ch(ic), out_ch(oc), kernel(k), stride(s), pad(p),
      weight({ic, oc, k, k}), bias({oc}) {}

void TConv2d::init(SeededRng& rng) {
    const int kk = kernel * kernel;
    init_uniform(weight, rng, glorot_limit(in_ch * kk, out_ch * kk));
    bias.fill(0.0);
}

std::vector<int> TConv2d::output_shape(const std::vector<int>& in) const {
    if (in.size() != 3 || in[0] != in_ch)
        throw std::invalid_argument("tconv2d: expected (" +
                                    std::to_string(in_ch) + ",H,W) input");
    const int oh = (in[1] - 1) * stride - 2 * pad + kernel;
    const int ow = (in[2] - 1) * stride - 2 * pad + kernel;
    if (oh < 1 || ow < 1)
        throw std::invalid_argument("tconv2d: input too small");
    return {out_ch, oh, ow};
}

Tensor TConv2d::forward(const Tensor& input) const {
    const auto os = output_shape(input.shape);
    const int h = input.shape[1], w = input.shape[2];
    const int OH = os[1], OW = os[2];
    const int K2 = out_ch * kernel * kernel, N = h * w;

    // cols = W^T * x, then scatter into the upsampled frame
    auto& wT = scratch(1, static_cast<size_t>(K2) * in_ch);
    for (int ic = 0; ic < in_ch; ++ic)
        for (int r = 0; r < K2; ++r)
            wT[static_cast<size_t>(r) * in_ch + ic] =
                weight.values[static_cast<size_t>(ic) * K2 + r];
    auto& cols = scratch(0, static_cast<size_t>(K2) * N);
    std::memset(cols.data(), 0, sizeof(double) * K2 * N);
    gemm_nn(K2, in_ch, N, wT.data(), input.values.data(), cols.data());

    Tensor out(os);
    col2im(cols.data(), out_ch, OH, OW, kernel, stride, pad, h, w,
           out.values.data());
    for (int oc = 0; oc < out_ch; ++oc) {
        double* y = out.values.data() + static_cast<size_t>(oc) * OH * OW;
        const double b = bias.values[oc];
        for (int j = 0; j < OH * OW; ++j) y[j] += b;
    }
    return out;
}

Tensor TConv2d::backward(const Tensor& input, const Tensor& upstream) {
    const auto os = output_shape(input.shape);
    require_shape(upstream, os, "tconv2d backward");
    const int h = input.shape[1], w = input.shape[2];
    const int OH = os[1], OW = os[2];
    const int K2 = out_ch * kernel * kernel, N = h * w;

    for (int oc = 0; oc < out_ch; ++oc) {
        const double* g = upstream.values.data() + static_cast<size_t>(oc) * OH * OW;
        double acc = 0.0;
        for (int j = 0; j < OH * OW; ++j) acc += g[j];
        bias.grad[oc] += acc;
    }

    auto& colg = scratch(0, static_cast<size_t>(K2) * N);
    im2col(upstream.values.data(), out_ch, OH, OW, kernel, stride, pad, h, w,
           colg.data());

    // d/d input: plain conv of the upstream with the weights
    Tensor gx(input.shape);
    gemm_nn(in_ch, K2, N, weight.values.data(), colg.data(), gx.values.data());

    // d/d weight
    gemm_nt(in_ch, N, K2, input.values.data(), colg.data(), weight.grad.data());
    return gx;
}

// ---- activations ----

Tensor LeakyRelu::forward(const Tensor& input) const {
    Tensor out(input.shape);
    for (int i = 0; i < input.numel(); ++i) {
        const double v = input.values[i];
        out.values[i] = v > 0.0 ? v : slope * v;
    }
    return out;
}

Tensor LeakyRelu::backward(const Tensor& input, const Tensor& upstream) {
    require_shape(upstream, input.shape, "leaky_relu backward");
    Tensor gx(input.shape);
    for (int i = 0; i < input.numel(); ++i)
        gx.values[i] = upstream.values[i] * (input.values[i] > 0.0 ? 1.0 : slope);
    return gx;
}

Tensor Relu::forward(const Tensor& input) const {
    Tensor out(input.shape);
    for (int i = 0; i < input.numel(); ++i)
        out.values[i] = input.values[i] > 0.0 ? input.values[i] : 0.0;
    return out;
}

Tensor Relu::backward(const Tensor& input, const Tensor& upstream) {
    require_shape(upstream, input.shape, "relu backward");
    Tensor gx(input.shape);
    for (int i = 0; i < input.numel(); ++i)
        gx.values[i] = input.values[i] > 0.0 ? upstream.values[i] : 0.0;
    return gx;
}

Tensor Sigmoid::forward(const Tensor& input) const {
    Tensor out(input.shape);
    for (int i = 0; i < input.numel(); ++i)
        out.values[i] = 1.0 / (1.0 + std::exp(-input.values[i]));
    return out;
}

Tensor Sigmoid::backward(const Tensor& input, const Tensor& upstream) {
    require_shape(upstream, input.shape, "sigmoid backward");
    Tensor gx(input.shape);
    for (int i = 0; i < input.numel(); ++i) {
        const double s = 1.0 / (1.0 + std::exp(-input.values[i]));
        gx.values[i] = upstream.values[i] * s * (1.0 - s);
    }
    return gx;
}

Tensor Tanh::forward(const Tensor& input) const {
    Tensor out(input.shape);
    for (int i = 0; i < input.numel(); ++i)
        out.values[i] = std::tanh(input.values[i]);
    return out;
}

Tensor Tanh::backward(const Tensor& input, const Tensor& upstream) {
    require_shape(upstream, input.shape, "tanh backward");
    Tensor gx(input.shape);
    for (int i = 0; i < input.numel(); ++i) {
        const double t = std::tanh(input.values[i]);
        gx.values[i] = upstream.values[i] * (1.0 - t * t);
    }
    return gx;
}

// ---- stack helpers ----

Tensor stack_forward(const LayerStack& stack, const Tensor& x) {
    Tensor cur = x;
    for (const auto& l : stack) cur = l->forward(cur);
    return cur;
}

std::vector<Tensor> stack_forward_trace(const LayerStack& stack, const Tensor& x) {
    std::vector<Tensor> trace;
    trace.reserve(stack.size() + 1);
    trace.push_back(x);
    for (const auto& l : stack) trace.push_back(l->forward(trace.back()));
    return trace;
}

Tensor stack_backward(LayerStack& stack, const std::vector<Tensor>& trace,
                      const Tensor& upstream) {
    if (trace.size() != stack.size() + 1)
        throw std::invalid_argument("stack_backward: trace/stack length mismatch");
    Tensor g = upstream;
    for (int i = static_cast<int>(stack.size()) - 1; i >= 0; --i)
        g = stack[static_cast<size_t>(i)]->backward(trace[static_cast<size_t>(i)], g);
    return g;
}

std::vector<Tensor*> stack_parameters(LayerStack& stack) {
    std::vector<Tensor*> out;
    for (auto& l : stack)
        for (auto* p : l->parameters()) out.push_back(p);
    return out;
}

void stack_init(LayerStack& stack, SeededRng& rng) {
    for (auto& l : stack) l->init(rng);
}

Tensor concat_channels(const Tensor& a, const Tensor& b) {
    if (a.ndim() != 3 || b.ndim() != 3 || a.shape[1] != b.shape[1] ||
        a.shape[2] != b.shape[2])
        throw std::invalid_argument("concat_channels: incompatible shapes " +
                                    a.shape_str() + " vs " + b.shape_str());
    Tensor out({a.shape[0] + b.shape[0], a.shape[1], a.shape[2]});
    std::memcpy(out.values.data(), a.values.data(),
                sizeof(double) * a.values.size());
    std::memcpy(out.values.data() + a.values.size(), b.values.data(),
                sizeof(double) * b.values.size());
    return out;
}

void split_channels(const Tensor& g, int c_first, Tensor& ga, Tensor& gb) {
    const int h = g.shape[1], w = g.shape[2];
    ga = Tensor({c_first, h, w});
    gb = Tensor({g.shape[0] - c_first, h, w});
    std::memcpy(ga.values.data(), g.values.data(),
                sizeof(double) * ga.values.size());
    std::memcpy(gb.values.data(), g.values.data() + ga.values.size(),
                sizeof(double) * gb.values.size());
}

}  // namespace fibersynth
