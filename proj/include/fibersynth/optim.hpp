#pragma once

#include <vector>

#include "fibersynth/tensor.hpp"

namespace fibersynth {

enum class OptimKind { RmsProp, Adam };

struct OptimConfig {
    OptimKind kind = OptimKind::Adam;
    double learning_rate = 1e-3;
    double rho = 0.9;      // rmsprop decay
    double beta1 = 0.9;    // adam moments
    double beta2 = 0.999;
    double eps = 1e-8;
};

// Owns per-parameter accumulators; parameters stay owned by their layers.
// step() consumes the grads currently stored in the attached tensors and
// throws TrainingError (with the step index) on any non-finite gradient.
class Optimizer {
public:
    Optimizer(OptimConfig cfg, std::vector<Tensor*> params);

    void step();
    void zero_grad();
    long step_count() const { return t_; }
    const OptimConfig& config() const { return cfg_; }

private:
    OptimConfig cfg_;
    std::vector<Tensor*> params_;
    std::vector<std::vector<double>> acc_;  // rmsprop sq-accumulator / adam v
    std::vector<std::vector<double>> mom_;  // adam m
    long t_ = 0;
};

}  // namespace fibersynth
