#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gneighbor {

/// 8-bit grayscale raster, row-major. The unit of all filtering and
/// evaluation in this library.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // size == width * height

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {
        if (w <= 0 || h <= 0)
            throw std::invalid_argument("GrayImage: dimensions must be positive");
    }
    GrayImage(int w, int h, std::vector<std::uint8_t> data)
        : width(w), height(h), pixels(std::move(data)) {
        if (w <= 0 || h <= 0)
            throw std::invalid_argument("GrayImage: dimensions must be positive");
        if (pixels.size() != static_cast<std::size_t>(w) * h)
            throw std::invalid_argument("GrayImage: pixel count does not match dimensions");
    }

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::size_t size() const { return pixels.size(); }

    bool operator==(const GrayImage&) const = default;
};

/// Double-precision raster with values in [0, 1].
struct NormImage {
    int width = 0;
    int height = 0;
    std::vector<double> pixels;

    NormImage() = default;
    NormImage(int w, int h, double fill = 0.0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {
        if (w <= 0 || h <= 0)
            throw std::invalid_argument("NormImage: dimensions must be positive");
    }

    double at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    double& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::size_t size() const { return pixels.size(); }
};

enum class PaddingMode {
    Zero,       // border filled with 0
    Replicate,  // border repeats the nearest edge pixel
};

/// Maps every intensity to intensity / 255.
NormImage normalize(const GrayImage& img);

/// Inverse of normalize: round-half-up to the nearest 8-bit code.
GrayImage denormalize(const NormImage& img);

/// Surrounds the image with a border of `radius` pixels on every side.
GrayImage pad(const GrayImage& img, int radius, PaddingMode mode);

/// Integer luma conversion for color ingest: round(0.299 R + 0.587 G + 0.114 B).
std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b);

}  // namespace gneighbor
