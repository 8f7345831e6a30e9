#pragma once

#include <array>

#include "fibersynth/image.hpp"
#include "fibersynth/rng.hpp"

namespace fibersynth {

// Stochastic coefficients of the defect curve
//   f(x) = a1*sin(a2*x) + a3*sin(x) + a4*cos(a5*x) + a6*x + a7*x^2
struct TrigParams {
    double a1 = 0, a2 = 0, a3 = 0, a4 = 0, a5 = 0, a6 = 0, a7 = 0;

    std::array<double, 7> as_array() const { return {a1, a2, a3, a4, a5, a6, a7}; }
};

// Per-coefficient sampling intervals. Defaults are the tuned fiber-defect
// intervals; they are calibrated for a 512-unit curve frame (see
// LabelGenConfig::model_frame).
struct TrigBounds {
    std::array<double, 7> lower{15.0, 0.02, 1.0, -0.5, -0.5, -0.5, 0.005};
    std::array<double, 7> upper{30.0, 0.03, 50.0, 0.5, 0.5, 0.5, 0.0095};

    void validate() const;  // throws ConfigError if lower > upper anywhere
};

struct RotationSpec {
    // Uniform in [lo_deg, hi_deg); set lo == hi for a fixed angle.
    double lo_deg = 0.0;
    double hi_deg = 180.0;

    static RotationSpec fixed(double deg) { return {deg, deg}; }
    static RotationSpec uniform(double lo, double hi) { return {lo, hi}; }
};

struct LabelGenConfig {
    int width = 64;
    int height = 64;
    int curves_min = 1;
    int curves_max = 4;
    int thickness_min = 1;  // stroke diameter in output pixels
    int thickness_max = 3;
    RotationSpec rotation;             // default Uniform[0, 180)
    TrigBounds bounds;
    int max_resamples = 16;
    // Curves are evaluated for x in [0, model_frame) with vertical offset
    // model_frame/2, then scaled into width x height. The default matches
    // the frame the coefficient intervals were tuned in; evaluating the
    // polynomial terms at a smaller frame would change how quickly curves
    // leave the frame and wreck the label sparsity.
    double model_frame = 512.0;

    void validate() const;  // throws ConfigError
};

// Each coefficient ~ Uniform[lower_i, upper_i). Draw order a1..a7.
TrigParams sample_trig_params(SeededRng& rng, const TrigBounds& bounds);

double eval_curve(const TrigParams& p, double x);

// Plot y = f(x) over the model frame, scale into the mask, stroke each
// sample with a disc of the given diameter, then rotate about the mask
// center by angle_deg (nearest-neighbor; out-of-frame parts clip away).
MaskBuf rasterize_curve(const TrigParams& p, const LabelGenConfig& cfg,
                        int thickness, double angle_deg);

// Union of N ~ Uniform{curves_min..curves_max} random curves. Resamples
// whole masks that come out empty, up to max_resamples attempts, then
// throws DataError. Per curve the draw order is: params a1..a7,
// thickness, angle.
MaskBuf generate_label(SeededRng& rng, const LabelGenConfig& cfg);

}  // namespace fibersynth
