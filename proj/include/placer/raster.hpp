#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace placer {

/// Pixel rectangle [x0, x1) x [y0, y1) in image coordinates (y down).
struct PixelRect {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;
    int y1 = 0;

    int width() const { return x1 - x0; }
    int height() const { return y1 - y0; }

    bool operator==(const PixelRect&) const = default;
};

/// 8-bit RGB raster, rows top to bottom.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // 3 bytes per pixel, row-major

    Image() = default;
    Image(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, 0) {}

    std::uint8_t* at(int x, int y) { return pixels.data() + (static_cast<std::size_t>(y) * width + x) * 3; }
    const std::uint8_t* at(int x, int y) const {
        return pixels.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }
};

/// Pixel-exact sub-image copy of exactly the bbox region, no resampling.
/// Throws FormatError if the bbox is empty or exceeds image bounds.
Image crop_raster(const Image& img, const PixelRect& bbox);

/// Binary PPM (P6) encoding; byte-deterministic for a given image.
std::string encode_ppm(const Image& img);
Image decode_ppm(std::string_view bytes);

Image read_ppm(const std::filesystem::path& path);
void write_ppm(const Image& img, const std::filesystem::path& path);

} // namespace placer
