#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "stringy/multiset.hpp"
#include "stringy/repspec.hpp"

namespace stringy {

/// Integer interval ⟦lo, hi⟧ (empty when lo > hi).
struct IntInterval {
    int64_t lo;
    int64_t hi;

    bool empty() const { return lo > hi; }
    IntMultiset to_multiset() const { return IntMultiset::interval(lo, hi); }
};

struct BlockInfo {
    bool trivial = false; // max d = 1: every bucket below p is empty
    std::vector<std::pair<int64_t, int64_t>> runs;
};

struct ConjectureReport {
    RepSpec spec;
    IntMultiset lhs;
    IntMultiset rhs;
    bool equal = false;
    std::map<int64_t, int64_t> diff; // lhs minus rhs multiplicities
    BlockInfo blocks;
};

/// {{j − sht(j) | 1 ≤ j ≤ p−1}} ⊎ ⟦−γ, 0⟧. Requires γ ≥ 0.
IntMultiset lhs_multiset(const RepSpec& s);

/// {{θ(s/r) + i | s/r ∈ F, 0 ≤ i < N_r}}. Requires γ ≥ 0.
IntMultiset rhs_multiset(const RepSpec& s);

ConjectureReport verify_conjecture(const RepSpec& s);

/// The interval form of the bucket contribution R_j, computed both from
/// the θ endpoints and from sht, with the two asserted equal. j = p gives
/// ⟦−γ, −γ+N_1−1⟧.
IntInterval rhs_bucket_interval(const RepSpec& s, int64_t j);

/// Rebuilds the right-hand multiset as R_p ⊎ ⊎_j R_j from the bucket
/// intervals (requires max d > 1).
IntMultiset rhs_from_bucket_intervals(const RepSpec& s);

/// Rebuilds the left-hand multiset from the block/border/gap decomposition
/// (requires max d > 1).
IntMultiset lhs_block_decomposition(const RepSpec& s);

struct IntervalUnionCheck {
    bool precondition_ok; // B_m ≤ min(A_m, A_{m+1}) for all m
    bool equal;           // ⊎⟦B_m, A_m⟧ = ⊎⟦B_m, A_{m+1}⟧, cyclic A
};

IntervalUnionCheck interval_union_identity(const std::vector<int64_t>& A,
                                           const std::vector<int64_t>& B);

} // namespace stringy
