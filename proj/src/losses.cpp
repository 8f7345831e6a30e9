#include "fibersynth/losses.hpp"

#include <cmath>
#include <stdexcept>

namespace fibersynth {

namespace {

constexpr double kBceEps = 1e-7;

void require_match(const Tensor& pred, const Tensor& target, const char* where) {
    if (!pred.same_shape(target))
        throw std::invalid_argument(std::string(where) + ": pred " +
                                    pred.shape_str() + " vs target " +
                                    target.shape_str());
}

}  // namespace

LossResult loss_bce(const Tensor& pred, const Tensor& target) {
    require_match(pred, target, "loss_bce");
    const int n = pred.numel();
    LossResult res;
    res.grad = Tensor(pred.shape);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double raw = pred.values[i];
        const double p = raw < kBceEps ? kBceEps
                         : (raw > 1.0 - kBceEps ? 1.0 - kBceEps : raw);
        const double t = target.values[i];
        acc += -(t * std::log(p) + (1.0 - t) * std::log(1.0 - p));
        // zero gradient where the clamp is active
        if (raw > kBceEps && raw < 1.0 - kBceEps)
            res.grad.values[i] = (-t / p + (1.0 - t) / (1.0 - p)) / n;
    }
    res.value = acc / n;
    return res;
}

LossResult loss_dice(const Tensor& pred, const Tensor& target, double smooth) {
    require_match(pred, target, "loss_dice");
    const int n = pred.numel();
    double inter = 0.0, psum = 0.0, tsum = 0.0;
    for (int i = 0; i < n; ++i) {
        inter += pred.values[i] * target.values[i];
        psum += pred.values[i];
        tsum += target.values[i];
    }
    const double num = 2.0 * inter + smooth;
    const double den = psum + tsum + smooth;
    LossResult res;
    res.value = 1.0 - num / den;
    res.grad = Tensor(pred.shape);
    const double den2 = den * den;
    for (int i = 0; i < n; ++i)
        res.grad.values[i] = -(2.0 * target.values[i] * den - num) / den2;
    return res;
}

LossResult loss_l1(const Tensor& pred, const Tensor& target) {
    require_match(pred, target, "loss_l1");
    const int n = pred.numel();
    LossResult res;
    res.grad = Tensor(pred.shape);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = pred.values[i] - target.values[i];
        acc += std::abs(d);
        res.grad.values[i] = (d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0)) / n;
    }
    res.value = acc / n;
    return res;
}

LossResult loss_mse(const Tensor& pred, const Tensor& target) {
    require_match(pred, target, "loss_mse");
    const int n = pred.numel();
    LossResult res;
    res.grad = Tensor(pred.shape);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = pred.values[i] - target.values[i];
        acc += d * d;
        res.grad.values[i] = 2.0 * d / n;
    }
    res.value = acc / n;
    return res;
}

double wasserstein_gap(const std::vector<double>& critic_real_scores,
                       const std::vector<double>& critic_fake_scores) {
    if (critic_real_scores.empty() || critic_fake_scores.empty())
        throw std::invalid_argument("wasserstein_gap: empty score vector");
    double r = 0.0, f = 0.0;
    for (double v : critic_real_scores) r += v;
    for (double v : critic_fake_scores) f += v;
    return r / critic_real_scores.size() - f / critic_fake_scores.size();
}

}  // namespace fibersynth
