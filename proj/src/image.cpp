#include "fibersynth/image.hpp"

#include <cmath>
#include <stdexcept>

namespace fibersynth {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Real: return "real";
        case Provenance::SyntheticTrig: return "synthetic_trig";
        case Provenance::SyntheticWgan: return "synthetic_wgan";
    }
    return "real";
}

Provenance provenance_from_name(const std::string& name) {
    if (name == "real") return Provenance::Real;
    if (name == "synthetic_trig") return Provenance::SyntheticTrig;
    if (name == "synthetic_wgan") return Provenance::SyntheticWgan;
    throw std::invalid_argument("unknown provenance: " + name);
}

MaskBuf binarize(const ImageBuf& img, double threshold) {
    if (img.channels != 1)
        throw std::invalid_argument("binarize: expected 1 channel, got " +
                                    std::to_string(img.channels));
    MaskBuf out(img.width, img.height);
    for (size_t i = 0; i < img.data.size(); ++i)
        out.data[i] = img.data[i] >= threshold ? 1 : 0;
    return out;
}

ImageBuf mask_to_image(const MaskBuf& mask) {
    ImageBuf out(mask.width, mask.height, 1);
    for (size_t i = 0; i < mask.data.size(); ++i)
        out.data[i] = static_cast<double>(mask.data[i]);
    return out;
}

bool image_values_valid(const ImageBuf& img) {
    if (img.data.size() !=
        static_cast<size_t>(img.width) * img.height * img.channels)
        return false;
    for (double v : img.data)
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) return false;
    return true;
}

bool mask_values_valid(const MaskBuf& mask) {
    if (mask.data.size() != static_cast<size_t>(mask.width) * mask.height)
        return false;
    for (auto v : mask.data)
        if (v != 0 && v != 1) return false;
    return true;
}

}  // namespace fibersynth
