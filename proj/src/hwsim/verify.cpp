#include "gneighbor/hwverify.hpp"

#include <random>
#include <stdexcept>

namespace gneighbor::hw {

namespace {
constexpr int kMaxCounterexamples = 8;
}

void VerifyResult::record_failure(const std::string& description) {
    ++failures;
    if (static_cast<int>(counterexamples.size()) < kMaxCounterexamples)
        counterexamples.push_back(description);
}

VerifyResult verify_mtl_truth_table() {
    VerifyResult res{"mtl-truth-table"};
    const MtlCell nor = MtlCell::nor_cell(2);
    const MtlCell nand = MtlCell::nand_cell(2);
    for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 1; ++b) {
            bool expected_nor = !(a || b);
            bool expected_nand = !(a && b);
            ++res.cases;
            if (mtl_eval(nor, {a != 0, b != 0}) != expected_nor)
                res.record_failure("NOR(" + std::to_string(a) + "," + std::to_string(b) + ")");
            ++res.cases;
            if (mtl_eval(nand, {a != 0, b != 0}) != expected_nand)
                res.record_failure("NAND(" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    return res;
}

VerifyResult verify_xor_gate() {
    VerifyResult res{"xor-gate"};
    for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 1; ++b) {
            ++res.cases;
            if (xor_tlg(a != 0, b != 0) != ((a ^ b) != 0))
                res.record_failure("XOR(" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    return res;
}

VerifyResult verify_xor_words(int bit_width) {
    VerifyResult res{"xor-word-" + std::to_string(bit_width) + "bit"};
    const unsigned limit = 1u << bit_width;
    for (unsigned a = 0; a < limit; ++a) {
        BitWord wa = to_bits(a, bit_width);
        for (unsigned b = 0; b < limit; ++b) {
            ++res.cases;
            BitWord out = xor_word(wa, to_bits(b, bit_width));
            if (bits_to_value(out) != (a ^ b))
                res.record_failure(bits_to_string(wa) + " ^ " +
                                   bits_to_string(to_bits(b, bit_width)) + " -> " +
                                   bits_to_string(out));
        }
    }
    return res;
}

VerifyResult verify_comparator(int bit_width, const CompareFn& fn) {
    VerifyResult res{"comparator-" + std::to_string(bit_width) + "bit"};
    const unsigned limit = 1u << bit_width;
    for (unsigned d = 0; d < limit; ++d) {
        BitWord wd = to_bits(d, bit_width);
        for (unsigned g = 0; g < limit; ++g) {
            ++res.cases;
            bool got = fn(wd, to_bits(g, bit_width));
            if (got != (d <= g))
                res.record_failure("leq('" + bits_to_string(wd) + "','" +
                                   bits_to_string(to_bits(g, bit_width)) + "') = " +
                                   (got ? "1" : "0"));
        }
    }
    return res;
}

VerifyResult verify_crossbar_roundtrip(int rows, int cols, int trials,
                                       std::uint64_t seed) {
    VerifyResult res{"crossbar-roundtrip"};
    std::mt19937_64 rng(seed);
    auto random_matrix = [&] {
        std::vector<BitWord> m(rows, BitWord(cols));
        for (auto& row : m)
            for (int j = 0; j < cols; ++j)
                row[j] = (rng() & 1) != 0;
        return m;
    };

    Crossbar xbar(rows, cols);
    for (int t = 0; t < trials; ++t) {
        // Overwrite whatever the previous trial left behind.
        std::vector<BitWord> target = random_matrix();
        ++res.cases;
        try {
            xbar.write(target);
        } catch (const std::logic_error& e) {
            res.record_failure(std::string("trial ") + std::to_string(t) + ": " + e.what());
            continue;
        }
        bool match = true;
        for (int i = 0; i < rows && match; ++i)
            for (int j = 0; j < cols && match; ++j)
                if (xbar.read(i, j) != target[i][j]) match = false;
        if (!match)
            res.record_failure("trial " + std::to_string(t) + ": read-back mismatch");
    }
    return res;
}

VerifyResult verify_pipeline(int bit_width, const std::vector<unsigned>& thresholds) {
    if (bit_width != 4 && bit_width != 8)
        throw std::invalid_argument("verify_pipeline: bit_width must be 4 or 8");
    VerifyResult res{"pipeline-" + std::to_string(bit_width) + "bit"};
    const unsigned limit = 1u << bit_width;
    for (unsigned g : thresholds) {
        if (g >= limit)
            throw std::invalid_argument("verify_pipeline: threshold does not fit bit width");
        for (unsigned r = 0; r < limit; ++r) {
            for (unsigned n = 0; n < limit; ++n) {
                ++res.cases;
                bool got = pipeline_pixel(static_cast<std::uint8_t>(r),
                                          static_cast<std::uint8_t>(n),
                                          static_cast<std::uint8_t>(g));
                bool expected = (r ^ n) <= g;
                if (got != expected)
                    res.record_failure("pipeline(r=" + std::to_string(r) +
                                       ",n=" + std::to_string(n) +
                                       ",g=" + std::to_string(g) + ")");
            }
        }
    }
    return res;
}

}  // namespace gneighbor::hw
