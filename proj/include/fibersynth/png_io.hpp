#pragma once

#include <string>

#include "fibersynth/image.hpp"

namespace fibersynth {

// Masks persist as 8-bit single-channel PNG with values {0, 255}.
// Images persist as 8-bit PNG, 1 or 3 channels.
// All failures raise DataError with the offending path in the message.

void write_mask_png(const std::string& path, const MaskBuf& mask);
void write_image_png(const std::string& path, const ImageBuf& img);

// Rejects masks containing any value other than 0 or 255.
MaskBuf read_mask_png(const std::string& path);
ImageBuf read_image_png(const std::string& path);

}  // namespace fibersynth
