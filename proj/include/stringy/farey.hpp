#pragma once

#include <cstdint>
#include <vector>

#include "stringy/fraction.hpp"

namespace stringy {

/// The Farey sequence of order m: all reduced fractions s/r with
/// 0 < s/r ≤ 1 and r ≤ m, sorted ascending. Always contains 1/1.
struct FareySeq {
    int64_t order = 0;
    std::vector<Fraction> elems;
};

FareySeq farey_seq(int64_t m);

/// Buckets F^(j) = F ∩ [j/p, (j+1)/p) for j = 0..p−1 and F^(p) = {1}.
/// Requires p > m so that no fraction sits on a bucket boundary.
std::vector<std::vector<Fraction>> farey_buckets(const FareySeq& f, int64_t p);

/// Maximal runs ⟦a_m, b_m⟧ of indices j < p with F^(j) nonempty.
struct BlockSequences {
    std::vector<int64_t> a;
    std::vector<int64_t> b;
};

BlockSequences block_sequences(const FareySeq& f, int64_t p);

} // namespace stringy
