#include "gneighbor/filter.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gneighbor {

void FilterConfig::validate() const {
    if (window < 3 || window % 2 == 0)
        throw std::invalid_argument("FilterConfig: window must be odd and >= 3");
    if (threshold < 0 || threshold > 255)
        throw std::invalid_argument("FilterConfig: threshold must be in [0, 255]");
}

NeighborMask gneighbor_mask(const std::vector<std::uint8_t>& window, int w,
                            int threshold, DistanceMode mode) {
    if (w < 1 || w % 2 == 0 || window.size() != static_cast<std::size_t>(w) * w)
        throw std::invalid_argument("gneighbor_mask: window must be w*w with w odd");

    NeighborMask mask;
    mask.window = w;
    mask.cells.resize(window.size());
    std::uint8_t center = window[static_cast<std::size_t>(w / 2) * w + w / 2];
    for (std::size_t i = 0; i < window.size(); ++i) {
        bool in = pixel_distance(center, window[i], mode) <= threshold;
        mask.cells[i] = in;
        mask.count += in;
    }
    assert(mask.at(w / 2, w / 2) && mask.count >= 1);
    return mask;
}

std::uint8_t aggregate(const std::vector<std::uint8_t>& window,
                       const NeighborMask& mask, Aggregator agg) {
    assert(window.size() == mask.cells.size());
    assert(mask.count >= 1);

    if (agg == Aggregator::Mean) {
        long sum = 0;
        for (std::size_t i = 0; i < window.size(); ++i)
            if (mask.cells[i]) sum += window[i];
        // round half-up of sum/count in integer arithmetic
        long v = (2 * sum + mask.count) / (2 * mask.count);
        return static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
    }

    std::vector<std::uint8_t> vals;
    vals.reserve(mask.count);
    for (std::size_t i = 0; i < window.size(); ++i)
        if (mask.cells[i]) vals.push_back(window[i]);
    std::sort(vals.begin(), vals.end());
    std::size_t n = vals.size();
    int v;
    if (n % 2 == 1) {
        v = vals[n / 2];
    } else {
        v = (vals[n / 2 - 1] + vals[n / 2] + 1) / 2;  // mean of middles, half-up
    }
    return static_cast<std::uint8_t>(std::clamp(v, 0, 255));
}

GrayImage filter_image(const GrayImage& img, const FilterConfig& cfg) {
    cfg.validate();
    if (img.width <= 0 || img.height <= 0)
        throw std::invalid_argument("filter_image: empty image");

    const int w = cfg.window;
    const int r = w / 2;
    const GrayImage padded = pad(img, r, cfg.padding);
    GrayImage out(img.width, img.height);

    // Each output pixel depends only on its own padded window.
#pragma omp parallel for schedule(static)
    for (int y = 0; y < img.height; ++y) {
        std::vector<std::uint8_t> window(static_cast<std::size_t>(w) * w);
        for (int x = 0; x < img.width; ++x) {
            for (int dy = 0; dy < w; ++dy)
                for (int dx = 0; dx < w; ++dx)
                    window[static_cast<std::size_t>(dy) * w + dx] =
                        padded.at(x + dx, y + dy);

            NeighborMask mask;
            if (cfg.adaptive) {
                mask = gneighbor_mask(window, w, cfg.threshold, cfg.distance);
            } else {
                mask.window = w;
                mask.cells.assign(window.size(), true);
                mask.count = w * w;
            }
            out.at(x, y) = aggregate(window, mask, cfg.aggregator);
        }
    }
    return out;
}

GrayImage square_filter(const GrayImage& img, int window, Aggregator agg,
                        PaddingMode padding) {
    FilterConfig cfg;
    cfg.window = window;
    cfg.threshold = 255;
    cfg.aggregator = agg;
    cfg.padding = padding;
    cfg.adaptive = false;
    return filter_image(img, cfg);
}

}  // namespace gneighbor
