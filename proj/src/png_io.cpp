#include "fibersynth/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "fibersynth/errors.hpp"

namespace fibersynth {

namespace {

std::vector<std::uint8_t> read_png_bytes(const std::string& path, int& width,
                                         int& height, int& channels) {
    png_image img;
    std::memset(&img, 0, sizeof(img));
    img.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&img, path.c_str()))
        throw DataError("cannot read PNG " + path + ": " + img.message);

    channels = (img.format & PNG_FORMAT_FLAG_COLOR) ? 3 : 1;
    img.format = channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    width = static_cast<int>(img.width);
    height = static_cast<int>(img.height);

    std::vector<std::uint8_t> bytes(PNG_IMAGE_SIZE(img));
    if (!png_image_finish_read(&img, nullptr, bytes.data(), 0, nullptr)) {
        png_image_free(&img);
        throw DataError("cannot decode PNG " + path + ": " + img.message);
    }
    return bytes;
}

void write_png_bytes(const std::string& path, const std::uint8_t* bytes,
                     int width, int height, int channels) {
    png_image img;
    std::memset(&img, 0, sizeof(img));
    img.version = PNG_IMAGE_VERSION;
    img.width = static_cast<png_uint_32>(width);
    img.height = static_cast<png_uint_32>(height);
    img.format = channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&img, path.c_str(), 0, bytes, 0, nullptr))
        throw DataError("cannot write PNG " + path + ": " + img.message);
}

}  // namespace

void write_mask_png(const std::string& path, const MaskBuf& mask) {
    std::vector<std::uint8_t> bytes(mask.data.size());
    for (size_t i = 0; i < mask.data.size(); ++i)
        bytes[i] = mask.data[i] ? 255 : 0;
    write_png_bytes(path, bytes.data(), mask.width, mask.height, 1);
}

void write_image_png(const std::string& path, const ImageBuf& img) {
    std::vector<std::uint8_t> bytes(img.data.size());
    for (size_t i = 0; i < img.data.size(); ++i) {
        double v = img.data[i];
        v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
        bytes[i] = static_cast<std::uint8_t>(std::lround(v * 255.0));
    }
    write_png_bytes(path, bytes.data(), img.width, img.height, img.channels);
}

MaskBuf read_mask_png(const std::string& path) {
    int w = 0, h = 0, c = 0;
    auto bytes = read_png_bytes(path, w, h, c);
    if (c != 1)
        throw DataError("mask PNG must be single-channel: " + path);
    MaskBuf mask(w, h);
    for (size_t i = 0; i < bytes.size(); ++i) {
        if (bytes[i] == 0)
            mask.data[i] = 0;
        else if (bytes[i] == 255)
            mask.data[i] = 1;
        else
            throw DataError("non-binary mask value " +
                            std::to_string(static_cast<int>(bytes[i])) +
                            " in " + path);
    }
    return mask;
}

ImageBuf read_image_png(const std::string& path) {
    int w = 0, h = 0, c = 0;
    auto bytes = read_png_bytes(path, w, h, c);
    ImageBuf img(w, h, c);
    for (size_t i = 0; i < bytes.size(); ++i)
        img.data[i] = bytes[i] / 255.0;
    return img;
}

}  // namespace fibersynth
