#include "gneighbor/image.hpp"

#include <algorithm>
#include <cmath>

namespace gneighbor {

NormImage normalize(const GrayImage& img) {
    NormImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        out.pixels[i] = img.pixels[i] / 255.0;
    return out;
}

GrayImage denormalize(const NormImage& img) {
    GrayImage out(img.width, img.height);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        double v = std::floor(img.pixels[i] * 255.0 + 0.5);
        out.pixels[i] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
    return out;
}

GrayImage pad(const GrayImage& img, int radius, PaddingMode mode) {
    if (radius < 0)
        throw std::invalid_argument("pad: radius must be non-negative");
    if (radius == 0)
        return img;

    GrayImage out(img.width + 2 * radius, img.height + 2 * radius, 0);
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            int sx = x - radius;
            int sy = y - radius;
            if (sx >= 0 && sx < img.width && sy >= 0 && sy < img.height) {
                out.at(x, y) = img.at(sx, sy);
            } else if (mode == PaddingMode::Replicate) {
                sx = std::clamp(sx, 0, img.width - 1);
                sy = std::clamp(sy, 0, img.height - 1);
                out.at(x, y) = img.at(sx, sy);
            }
            // Zero mode: already 0.
        }
    }
    return out;
}

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    double v = 0.299 * r + 0.587 * g + 0.114 * b;
    return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

}  // namespace gneighbor
