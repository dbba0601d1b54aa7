#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gneighbor/filter.hpp"
#include "support/filter_oracle.hpp"

using namespace gneighbor;
using gneighbor::testing::oracle_filter;

namespace {

GrayImage random_image(std::mt19937_64& rng, int w, int h) {
    GrayImage img(w, h);
    for (auto& p : img.pixels)
        p = static_cast<std::uint8_t>(rng() & 0xFF);
    return img;
}

}  // namespace

TEST_CASE("pixel_distance") {
    CHECK(pixel_distance(200, 10, DistanceMode::Abs) == 190);
    CHECK(pixel_distance(10, 200, DistanceMode::Abs) == 190);
    for (int x : {0, 13, 200, 255}) {
        CHECK(pixel_distance(std::uint8_t(x), std::uint8_t(x), DistanceMode::Abs) == 0);
        CHECK(pixel_distance(std::uint8_t(x), std::uint8_t(x), DistanceMode::Xor) == 0);
    }
    CHECK(pixel_distance(0b11110011, 0b11000110, DistanceMode::Xor) == 0b00110101);
    CHECK(pixel_distance(0b11110011, 0b11000110, DistanceMode::Xor) == 53);
}

TEST_CASE("gneighbor_mask all-equal window") {
    for (int w : {3, 5}) {
        std::vector<std::uint8_t> window(static_cast<std::size_t>(w) * w, 77);
        NeighborMask m = gneighbor_mask(window, w, 0, DistanceMode::Abs);
        CHECK(m.count == w * w);
    }
}

TEST_CASE("gneighbor_mask splits a two-level window at eta 13") {
    std::vector<std::uint8_t> window{10, 10, 200, 10, 10, 200, 10, 10, 200};
    NeighborMask m = gneighbor_mask(window, 3, 13, DistanceMode::Abs);
    CHECK(m.count == 6);
    for (int y = 0; y < 3; ++y) {
        CHECK(m.at(0, y));
        CHECK(m.at(1, y));
        CHECK_FALSE(m.at(2, y));
    }
}

TEST_CASE("gneighbor_mask is all-true at the maximal threshold") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::uint8_t> window(9);
        for (auto& v : window) v = static_cast<std::uint8_t>(rng() & 0xFF);
        for (auto mode : {DistanceMode::Abs, DistanceMode::Xor}) {
            NeighborMask m = gneighbor_mask(window, 3, 255, mode);
            CHECK(m.count == 9);
        }
    }
}

TEST_CASE("gneighbor_mask center is always true") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint8_t> window(25);
        for (auto& v : window) v = static_cast<std::uint8_t>(rng() & 0xFF);
        for (auto mode : {DistanceMode::Abs, DistanceMode::Xor}) {
            NeighborMask m = gneighbor_mask(window, 5, 0, mode);
            CHECK(m.at(2, 2));
            CHECK(m.count >= 1);
        }
    }
}

TEST_CASE("aggregate mean and median") {
    // six masked cells of value 10 inside a 3x3 window
    std::vector<std::uint8_t> window{10, 10, 200, 10, 10, 200, 10, 10, 200};
    NeighborMask m = gneighbor_mask(window, 3, 13, DistanceMode::Abs);
    CHECK(aggregate(window, m, Aggregator::Mean) == 10);
    CHECK(aggregate(window, m, Aggregator::Median) == 10);

    // masked values {0, 255}: mean rounds 127.5 half-up to 128
    std::vector<std::uint8_t> pair{0, 255, 0, 0};
    NeighborMask pm;
    pm.window = 2;
    pm.cells = {true, true, false, false};
    pm.count = 2;
    CHECK(aggregate(pair, pm, Aggregator::Mean) == 128);
    CHECK(aggregate(pair, pm, Aggregator::Median) == 128);

    // odd-count median
    std::vector<std::uint8_t> three{3, 9, 100, 0};
    NeighborMask tm;
    tm.window = 2;
    tm.cells = {true, true, true, false};
    tm.count = 3;
    CHECK(aggregate(three, tm, Aggregator::Median) == 9);
}

TEST_CASE("filter_image keeps constant images constant") {
    FilterConfig cfg;
    for (std::uint8_t c : {std::uint8_t(0), std::uint8_t(40), std::uint8_t(255)}) {
        GrayImage img(6, 4, c);
        for (auto agg : {Aggregator::Mean, Aggregator::Median}) {
            for (bool adaptive : {true, false}) {
                cfg.aggregator = agg;
                cfg.adaptive = adaptive;
                // Replicate padding: all windows are constant, any config.
                cfg.padding = PaddingMode::Replicate;
                CHECK(filter_image(img, cfg) == img);
            }
            // Zero padding: holds when the pad pixels are excluded by the
            // mask (distance c > eta) or indistinguishable (c == 0).
            cfg.adaptive = true;
            cfg.padding = PaddingMode::Zero;
            if (c == 0 || c > cfg.threshold)
                CHECK(filter_image(img, cfg) == img);
        }
    }
}

TEST_CASE("filter_image isolates a salt pixel") {
    GrayImage img(5, 5, 10);
    img.at(2, 2) = 255;
    FilterConfig cfg;  // 3x3, eta 13, mean, adaptive, zero padding
    GrayImage out = filter_image(img, cfg);

    // The salt pixel has no G-neighbors besides itself, so it survives.
    CHECK(out.at(2, 2) == 255);
    // Its neighbors exclude the salt value and stay 10.
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
            if (dx || dy)
                CHECK(out.at(2 + dx, 2 + dy) == 10);
}

TEST_CASE("non-adaptive mean equals a zero-padded box filter") {
    std::mt19937_64 rng(6);
    GrayImage img = random_image(rng, 9, 7);
    FilterConfig cfg;
    cfg.adaptive = false;
    cfg.padding = PaddingMode::Zero;
    GrayImage out = filter_image(img, cfg);

    // direct 3x3 box convolution with zero borders
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            long sum = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    int sx = x + dx, sy = y + dy;
                    if (sx >= 0 && sx < img.width && sy >= 0 && sy < img.height)
                        sum += img.at(sx, sy);
                }
            }
            long expected = (2 * sum + 9) / 18;  // round(sum/9) half-up
            CHECK(out.at(x, y) == expected);
        }
    }
}

TEST_CASE("square_filter on a center spike") {
    GrayImage img(3, 3, 10);
    img.at(1, 1) = 255;
    GrayImage mean = square_filter(img, 3, Aggregator::Mean, PaddingMode::Replicate);
    CHECK(mean.at(1, 1) == 37);  // round((8*10 + 255) / 9)
    GrayImage med = square_filter(img, 3, Aggregator::Median, PaddingMode::Replicate);
    CHECK(med.at(1, 1) == 10);
}

TEST_CASE("square_filter equals filter_image with adaptive off") {
    std::mt19937_64 rng(8);
    GrayImage img = random_image(rng, 8, 8);
    for (auto agg : {Aggregator::Mean, Aggregator::Median}) {
        for (auto padding : {PaddingMode::Zero, PaddingMode::Replicate}) {
            FilterConfig cfg;
            cfg.window = 5;
            cfg.aggregator = agg;
            cfg.padding = padding;
            cfg.adaptive = false;
            CHECK(square_filter(img, 5, agg, padding) == filter_image(img, cfg));
        }
    }
}

TEST_CASE("adaptive filtering at eta 255 reproduces the square filter") {
    std::mt19937_64 rng(9);
    GrayImage img = random_image(rng, 10, 6);
    for (auto agg : {Aggregator::Mean, Aggregator::Median}) {
        for (auto mode : {DistanceMode::Abs, DistanceMode::Xor}) {
            FilterConfig cfg;
            cfg.threshold = 255;
            cfg.aggregator = agg;
            cfg.distance = mode;
            cfg.adaptive = true;
            CHECK(filter_image(img, cfg) ==
                  square_filter(img, 3, agg, PaddingMode::Zero));
        }
    }
}

TEST_CASE("output stays within the window value range") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 10; ++trial) {
        GrayImage img = random_image(rng, 8, 8);
        FilterConfig cfg;
        cfg.window = 3;
        cfg.threshold = 40;
        cfg.aggregator = trial % 2 ? Aggregator::Median : Aggregator::Mean;
        GrayImage padded = pad(img, 1, cfg.padding);
        GrayImage out = filter_image(img, cfg);
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                int lo = 255, hi = 0;
                for (int dy = 0; dy < 3; ++dy) {
                    for (int dx = 0; dx < 3; ++dx) {
                        int v = padded.at(x + dx, y + dy);
                        lo = std::min(lo, v);
                        hi = std::max(hi, v);
                    }
                }
                CHECK(out.at(x, y) >= lo);
                CHECK(out.at(x, y) <= hi);
            }
        }
    }
}

TEST_CASE("masks grow monotonically with eta in Abs mode") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::uint8_t> window(9);
        for (auto& v : window) v = static_cast<std::uint8_t>(rng() & 0xFF);
        NeighborMask prev = gneighbor_mask(window, 3, 0, DistanceMode::Abs);
        for (int eta : {5, 13, 40, 100, 255}) {
            NeighborMask next = gneighbor_mask(window, 3, eta, DistanceMode::Abs);
            for (std::size_t i = 0; i < prev.cells.size(); ++i)
                if (prev.cells[i]) CHECK(next.cells[i]);
            CHECK(next.count >= prev.count);
            prev = next;
        }
    }
}

TEST_CASE("filter_image matches the brute-force evaluator") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        GrayImage img = random_image(rng, 8, 8);
        for (int w : {3, 5}) {
            for (int eta : {0, 13, 40, 255}) {
                for (auto mode : {DistanceMode::Abs, DistanceMode::Xor}) {
                    for (auto agg : {Aggregator::Mean, Aggregator::Median}) {
                        for (auto padding : {PaddingMode::Zero, PaddingMode::Replicate}) {
                            FilterConfig cfg;
                            cfg.window = w;
                            cfg.threshold = eta;
                            cfg.aggregator = agg;
                            cfg.distance = mode;
                            cfg.padding = padding;
                            cfg.adaptive = true;
                            REQUIRE(filter_image(img, cfg) == oracle_filter(img, cfg));
                            cfg.adaptive = false;
                            REQUIRE(filter_image(img, cfg) == oracle_filter(img, cfg));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("FilterConfig validation") {
    FilterConfig cfg;
    cfg.window = 4;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.window = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.window = 3;
    cfg.threshold = 300;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.threshold = -1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.threshold = 13;
    CHECK_NOTHROW(cfg.validate());
}
