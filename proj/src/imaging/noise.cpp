#include "gneighbor/noise.hpp"

#include <random>
#include <stdexcept>

namespace gneighbor {

GrayImage add_salt_pepper(const GrayImage& img, const NoiseSpec& spec) {
    if (spec.density < 0.0 || spec.density > 1.0)
        throw std::invalid_argument("add_salt_pepper: density must be in [0, 1]");

    GrayImage out = img;
    if (spec.density == 0.0)
        return out;

    std::mt19937_64 rng(spec.seed);
    // 53-bit uniform in [0, 1); avoids distribution objects so the pixel
    // sequence is fixed by the mt19937_64 stream alone.
    auto uniform = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };

    for (auto& px : out.pixels) {
        if (uniform() < spec.density)
            px = (rng() & 1) ? 255 : 0;
    }
    return out;
}

}  // namespace gneighbor
