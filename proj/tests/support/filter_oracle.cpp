#include "filter_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace gneighbor::testing {

namespace {

int clamp_index(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

}  // namespace

GrayImage oracle_filter(const GrayImage& img, const FilterConfig& cfg) {
    const int w = cfg.window;
    const int r = (w - 1) / 2;
    const int pw = img.width + 2 * r;
    const int ph = img.height + 2 * r;

    // Padded buffer built by hand.
    std::vector<int> padded(static_cast<std::size_t>(pw) * ph, 0);
    for (int y = 0; y < ph; ++y) {
        for (int x = 0; x < pw; ++x) {
            int sx = x - r;
            int sy = y - r;
            bool inside = sx >= 0 && sx < img.width && sy >= 0 && sy < img.height;
            if (inside) {
                padded[static_cast<std::size_t>(y) * pw + x] = img.at(sx, sy);
            } else if (cfg.padding == PaddingMode::Replicate) {
                padded[static_cast<std::size_t>(y) * pw + x] =
                    img.at(clamp_index(sx, 0, img.width - 1),
                           clamp_index(sy, 0, img.height - 1));
            }
        }
    }

    GrayImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            int center = padded[static_cast<std::size_t>(y + r) * pw + (x + r)];
            std::vector<int> selected;
            for (int dy = -r; dy <= r; ++dy) {
                for (int dx = -r; dx <= r; ++dx) {
                    int v = padded[static_cast<std::size_t>(y + r + dy) * pw + (x + r + dx)];
                    int dist = cfg.distance == DistanceMode::Xor ? (center ^ v)
                                                                 : std::abs(center - v);
                    bool keep = !cfg.adaptive || dist <= cfg.threshold;
                    if (keep) selected.push_back(v);
                }
            }

            int result;
            if (cfg.aggregator == Aggregator::Mean) {
                long sum = 0;
                for (int v : selected) sum += v;
                long count = static_cast<long>(selected.size());
                long q = sum / count;
                long rem = sum % count;
                result = static_cast<int>(q + (2 * rem >= count ? 1 : 0));
            } else {
                std::sort(selected.begin(), selected.end());
                std::size_t n = selected.size();
                if (n % 2 == 1) {
                    result = selected[n / 2];
                } else {
                    int mid = selected[n / 2 - 1] + selected[n / 2];
                    result = mid / 2 + mid % 2;
                }
            }
            out.at(x, y) = static_cast<std::uint8_t>(clamp_index(result, 0, 255));
        }
    }
    return out;
}

}  // namespace gneighbor::testing
