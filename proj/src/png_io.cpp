#include <png.h>

#include <cstdio>
#include <vector>

#include "annustitch/error.hpp"
#include "annustitch/ingest.hpp"

namespace annustitch {

GrayImage load_gray(const std::filesystem::path& path) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;

    if (!png_image_begin_read_from_file(&image, path.string().c_str())) {
        std::string msg = image.message[0] ? image.message : "unreadable PNG";
        png_image_free(&image);
        throw Error(ErrorCode::DecodeError, path.string() + ": " + msg);
    }
    if (image.format & PNG_FORMAT_FLAG_LINEAR) {
        png_image_free(&image);
        throw Error(ErrorCode::DecodeError, path.string() + ": 16-bit PNG not supported");
    }

    const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
    image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    const std::size_t stride = static_cast<std::size_t>(PNG_IMAGE_ROW_STRIDE(image));
    std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
        std::string msg = image.message[0] ? image.message : "decode failed";
        png_image_free(&image);
        throw Error(ErrorCode::DecodeError, path.string() + ": " + msg);
    }

    GrayImage out(static_cast<int>(image.width), static_cast<int>(image.height));
    for (int y = 0; y < out.height; ++y) {
        const std::uint8_t* src = buffer.data() + static_cast<std::size_t>(y) * stride;
        float* dst = out.row(y);
        if (color) {
            for (int x = 0; x < out.width; ++x) {
                const double r = src[3 * x + 0];
                const double g = src[3 * x + 1];
                const double b = src[3 * x + 2];
                dst[x] = static_cast<float>(0.299 * r + 0.587 * g + 0.114 * b);
            }
        } else {
            for (int x = 0; x < out.width; ++x) {
                dst[x] = static_cast<float>(src[x]);
            }
        }
    }
    return out;
}

void save_gray(const std::filesystem::path& path, const GrayImage& img) {
    if (!image_valid(img)) {
        throw Error(ErrorCode::InvalidArgument, "save_gray: invalid image");
    }
    const std::vector<std::uint8_t> bytes = quantize8(img);

    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.width);
    image.height = static_cast<png_uint_32>(img.height);
    image.format = PNG_FORMAT_GRAY;

    if (!png_image_write_to_file(&image, path.string().c_str(), 0, bytes.data(), 0, nullptr)) {
        std::string msg = image.message[0] ? image.message : "write failed";
        png_image_free(&image);
        throw Error(ErrorCode::IoError, path.string() + ": " + msg);
    }
}

} // namespace annustitch
