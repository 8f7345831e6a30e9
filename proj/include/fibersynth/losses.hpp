#pragma once

#include <vector>

#include "fibersynth/tensor.hpp"

namespace fibersynth {

struct LossResult {
    double value = 0.0;
    Tensor grad;  // d value / d pred
};

// Mean of -[t*ln(p) + (1-t)*ln(1-p)], p clamped to [1e-7, 1-1e-7].
LossResult loss_bce(const Tensor& pred, const Tensor& target);

// 1 - (2*sum(p*t) + smooth) / (sum(p) + sum(t) + smooth)
LossResult loss_dice(const Tensor& pred, const Tensor& target,
                     double smooth = 1.0);

LossResult loss_l1(const Tensor& pred, const Tensor& target);
LossResult loss_mse(const Tensor& pred, const Tensor& target);

// mean(real) - mean(fake); the critic ascends this, the generator ascends
// mean(fake). Throws std::invalid_argument on empty inputs.
double wasserstein_gap(const std::vector<double>& critic_real_scores,
                       const std::vector<double>& critic_fake_scores);

}  // namespace fibersynth
