#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fibersynth {

// Intensity image. Row-major, channel-interleaved, values in [0, 1].
// 8-bit files map in as v/255 and out as round(v*255).
struct ImageBuf {
    int width = 0;
    int height = 0;
    int channels = 1;  // 1 or 3
    std::vector<double> data;

    ImageBuf() = default;
    ImageBuf(int w, int h, int c = 1, double fill = 0.0)
        : width(w), height(h), channels(c),
          data(static_cast<size_t>(w) * h * c, fill) {}

    double& at(int x, int y, int c = 0) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    double at(int x, int y, int c = 0) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    size_t size() const { return data.size(); }
};

// Binary label mask, row-major, values strictly {0, 1}; 1 = defect.
struct MaskBuf {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    MaskBuf() = default;
    MaskBuf(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

    std::uint8_t& at(int x, int y) {
        return data[static_cast<size_t>(y) * width + x];
    }
    std::uint8_t at(int x, int y) const {
        return data[static_cast<size_t>(y) * width + x];
    }
    size_t size() const { return data.size(); }

    size_t foreground_count() const {
        size_t n = 0;
        for (auto v : data) n += v;
        return n;
    }
    double foreground_fraction() const {
        return data.empty() ? 0.0
                            : static_cast<double>(foreground_count()) / data.size();
    }
};

enum class Provenance { Real, SyntheticTrig, SyntheticWgan };

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

// One training pair; image and mask dimensions always agree.
struct PairSample {
    std::string id;
    ImageBuf image;
    MaskBuf mask;
    Provenance provenance = Provenance::Real;
};

// Threshold a single-channel image: out = 1 iff v >= threshold.
// Throws std::invalid_argument on multi-channel input.
MaskBuf binarize(const ImageBuf& img, double threshold);

// Mask embedded as a single-channel intensity image ({0,1} values).
ImageBuf mask_to_image(const MaskBuf& mask);

// Validation helpers used by tests and ingestion.
bool image_values_valid(const ImageBuf& img);   // finite, within [0,1]
bool mask_values_valid(const MaskBuf& mask);    // strictly {0,1}

}  // namespace fibersynth
