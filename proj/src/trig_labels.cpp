#include "fibersynth/trig_labels.hpp"

#include <cmath>
#include <string>

#include "fibersynth/errors.hpp"

namespace fibersynth {

void TrigBounds::validate() const {
    for (int i = 0; i < 7; ++i)
        if (lower[i] > upper[i])
            throw ConfigError("trig bounds: lower > upper for a" +
                              std::to_string(i + 1));
}

void LabelGenConfig::validate() const {
    if (width < 1 || height < 1)
        throw ConfigError("label config: mask size must be positive");
    if (curves_min < 1 || curves_min > curves_max)
        throw ConfigError("label config: need 1 <= curves_min <= curves_max");
    if (thickness_min < 1 || thickness_min > thickness_max)
        throw ConfigError("label config: need 1 <= thickness_min <= thickness_max");
    if (max_resamples < 1)
        throw ConfigError("label config: max_resamples must be >= 1");
    if (model_frame <= 0.0)
        throw ConfigError("label config: model_frame must be positive");
    bounds.validate();
}

TrigParams sample_trig_params(SeededRng& rng, const TrigBounds& bounds) {
    bounds.validate();
    TrigParams p;
    p.a1 = rng.uniform(bounds.lower[0], bounds.upper[0]);
    p.a2 = rng.uniform(bounds.lower[1], bounds.upper[1]);
    p.a3 = rng.uniform(bounds.lower[2], bounds.upper[2]);
    p.a4 = rng.uniform(bounds.lower[3], bounds.upper[3]);
    p.a5 = rng.uniform(bounds.lower[4], bounds.upper[4]);
    p.a6 = rng.uniform(bounds.lower[5], bounds.upper[5]);
    p.a7 = rng.uniform(bounds.lower[6], bounds.upper[6]);
    return p;
}

double eval_curve(const TrigParams& p, double x) {
    return p.a1 * std::sin(p.a2 * x) + p.a3 * std::sin(x) +
           p.a4 * std::cos(p.a5 * x) + p.a6 * x + p.a7 * x * x;
}

namespace {

void stroke_disc(MaskBuf& mask, int cx, int cy, int thickness) {
    const double r = thickness / 2.0;
    const double r2 = r * r;
    const int ir = static_cast<int>(std::floor(r));
    for (int dy = -ir; dy <= ir; ++dy) {
        for (int dx = -ir; dx <= ir; ++dx) {
            if (dx * dx + dy * dy > r2) continue;
            const int x = cx + dx, y = cy + dy;
            if (x < 0 || x >= mask.width || y < 0 || y >= mask.height) continue;
            mask.at(x, y) = 1;
        }
    }
}

MaskBuf rotate_nearest(const MaskBuf& src, double angle_deg) {
    MaskBuf out(src.width, src.height);
    const double theta = angle_deg * M_PI / 180.0;
    const double c = std::cos(theta), s = std::sin(theta);
    const double cx = (src.width - 1) / 2.0, cy = (src.height - 1) / 2.0;
    for (int y = 0; y < src.height; ++y) {
        for (int x = 0; x < src.width; ++x) {
            // inverse map: rotate the output pixel back by -theta
            const double dx = x - cx, dy = y - cy;
            const double sx = c * dx + s * dy + cx;
            const double sy = -s * dx + c * dy + cy;
            const int ix = static_cast<int>(std::lround(sx));
            const int iy = static_cast<int>(std::lround(sy));
            if (ix < 0 || ix >= src.width || iy < 0 || iy >= src.height) continue;
            out.at(x, y) = src.at(ix, iy);
        }
    }
    return out;
}

}  // namespace

MaskBuf rasterize_curve(const TrigParams& p, const LabelGenConfig& cfg,
                        int thickness, double angle_deg) {
    if (thickness < 1)
        throw ConfigError("rasterize_curve: thickness must be >= 1");
    MaskBuf mask(cfg.width, cfg.height);

    const double sx = cfg.width / cfg.model_frame;
    const double sy = cfg.height / cfg.model_frame;
    const double y_offset = cfg.model_frame / 2.0;

    // Step small enough that consecutive samples move less than half an
    // output pixel in x and y; slope bound from the term derivatives.
    const double slope = std::abs(p.a1 * p.a2) + std::abs(p.a3) +
                         std::abs(p.a4 * p.a5) + std::abs(p.a6) +
                         2.0 * std::abs(p.a7) * cfg.model_frame;
    const double du = 0.5 / std::max({sx, slope * sy, 1.0 / cfg.model_frame});

    for (double u = 0.0; u < cfg.model_frame; u += du) {
        const double yv = eval_curve(p, u) + y_offset;
        const int px = static_cast<int>(std::lround(u * sx));
        const int py = static_cast<int>(std::lround(yv * sy));
        if (px < 0 || px >= cfg.width || py < 0 || py >= cfg.height) continue;
        stroke_disc(mask, px, py, thickness);
    }

    if (angle_deg != 0.0) mask = rotate_nearest(mask, angle_deg);
    return mask;
}

MaskBuf generate_label(SeededRng& rng, const LabelGenConfig& cfg) {
    cfg.validate();
    for (int attempt = 0; attempt < cfg.max_resamples; ++attempt) {
        MaskBuf acc(cfg.width, cfg.height);
        const int n = static_cast<int>(
            rng.uniform_int(cfg.curves_min, cfg.curves_max));
        for (int k = 0; k < n; ++k) {
            const TrigParams p = sample_trig_params(rng, cfg.bounds);
            const int thickness = static_cast<int>(
                rng.uniform_int(cfg.thickness_min, cfg.thickness_max));
            const double angle =
                rng.uniform(cfg.rotation.lo_deg, cfg.rotation.hi_deg);
            const MaskBuf curve = rasterize_curve(p, cfg, thickness, angle);
            for (size_t i = 0; i < acc.data.size(); ++i)
                acc.data[i] |= curve.data[i];
        }
        if (acc.foreground_count() > 0) return acc;
    }
    throw DataError("label generation produced only empty masks after " +
                    std::to_string(cfg.max_resamples) +
                    " attempts; check geometry/bounds");
}

}  // namespace fibersynth
