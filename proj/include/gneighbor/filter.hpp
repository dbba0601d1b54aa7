#pragma once

#include <cstdint>
#include <vector>

#include "gneighbor/image.hpp"

namespace gneighbor {

enum class DistanceMode {
    Abs,  // |a - b|
    Xor,  // a ^ b, read as an 8-bit unsigned integer
};

enum class Aggregator {
    Mean,
    Median,
};

struct FilterConfig {
    int window = 3;             // odd, >= 3
    int threshold = 13;         // similarity threshold on the 0-255 scale
    Aggregator aggregator = Aggregator::Mean;
    DistanceMode distance = DistanceMode::Abs;
    PaddingMode padding = PaddingMode::Zero;
    bool adaptive = true;       // false = full square window

    void validate() const;
};

/// Boolean w*w grid marking the G-neighbors of one window. The center entry
/// is always true (self-distance is zero).
struct NeighborMask {
    int window = 0;
    std::vector<bool> cells;  // row-major, size window*window
    int count = 0;            // number of true entries

    bool at(int x, int y) const {
        return cells[static_cast<std::size_t>(y) * window + x];
    }
};

/// Gray-level distance between two 8-bit codes under the chosen mode.
inline int pixel_distance(std::uint8_t a, std::uint8_t b, DistanceMode mode) {
    if (mode == DistanceMode::Xor)
        return a ^ b;
    return a > b ? a - b : b - a;
}

/// Marks each window cell whose distance to the center is <= threshold.
/// `window` is a row-major w*w intensity patch, w odd.
NeighborMask gneighbor_mask(const std::vector<std::uint8_t>& window, int w,
                            int threshold, DistanceMode mode);

/// Aggregates the masked intensities: mean rounds half-up; median of an even
/// count takes the mean of the two middle values, then rounds half-up.
std::uint8_t aggregate(const std::vector<std::uint8_t>& window,
                       const NeighborMask& mask, Aggregator agg);

/// The variable-pixel G-neighbor filter. Pads the image, then replaces each
/// pixel with the aggregate of its G-neighbors (adaptive) or of the full
/// window (cfg.adaptive = false). Pixels are processed independently.
GrayImage filter_image(const GrayImage& img, const FilterConfig& cfg);

/// Conventional fixed-square-window baseline.
GrayImage square_filter(const GrayImage& img, int window, Aggregator agg,
                        PaddingMode padding);

}  // namespace gneighbor
