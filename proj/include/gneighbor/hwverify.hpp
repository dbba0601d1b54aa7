#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gneighbor/hwsim.hpp"

namespace gneighbor::hw {

/// Outcome of one exhaustive verification suite.
struct VerifyResult {
    std::string suite;
    long cases = 0;
    long failures = 0;
    std::vector<std::string> counterexamples;  // first few failing inputs

    bool ok() const { return failures == 0; }
    void record_failure(const std::string& description);
};

/// Table-driven check of the 2-input MTL cell in NOR and NAND configuration.
VerifyResult verify_mtl_truth_table();

/// xor_tlg against bitwise XOR, all four input pairs.
VerifyResult verify_xor_gate();

/// Word-level XOR against the ^ operator over every pair of `bit_width`-wide
/// words (2^(2*width) cases).
VerifyResult verify_xor_words(int bit_width);

using CompareFn = std::function<bool(const BitWord&, const BitWord&)>;

/// compare_leq (or an injected implementation) against integer <= over every
/// pair of `bit_width`-wide words.
VerifyResult verify_comparator(int bit_width, const CompareFn& fn = compare_leq);

/// Write-then-read round trips on random bit matrices, including overwrite.
VerifyResult verify_crossbar_roundtrip(int rows, int cols, int trials,
                                       std::uint64_t seed);

/// pipeline_pixel against [(r ^ n) <= g] for every (r, n) pair at each g.
/// bit_width 4 restricts r, n, g to the low nibble range.
VerifyResult verify_pipeline(int bit_width, const std::vector<unsigned>& thresholds);

}  // namespace gneighbor::hw
