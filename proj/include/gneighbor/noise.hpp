#pragma once

#include <cstdint>

#include "gneighbor/image.hpp"

namespace gneighbor {

/// Salt-and-pepper corruption parameters. Identical seed gives identical
/// output; the generator is mt19937_64 so runs are reproducible.
struct NoiseSpec {
    double density = 0.05;   // fraction of pixels corrupted, in [0, 1]
    std::uint64_t seed = 0;
};

/// Replaces approximately density*N pixels with 0 or 255, equiprobable.
/// Uncorrupted pixels are bit-identical to the input.
GrayImage add_salt_pepper(const GrayImage& img, const NoiseSpec& spec);

}  // namespace gneighbor
