#pragma once

#include "stringy/fraction.hpp"
#include "stringy/ratfunc.hpp"
#include "stringy/repspec.hpp"

namespace stringy {

enum class MstVariant { alpha_closed, alpha_subsets, zp_closed };

struct MstResult {
    RatFunc value;
    RepSpec spec;
    MstVariant variant;
};

MstResult compute_mst(const RepSpec& s, MstVariant variant, int64_t subset_cap = 20);

/// Farey closed form of mst(A/(α_p, d)):
///   L^d − L^l + L^{l−1}/(1 − L^{−1−γ}) · Σ_{s/r∈F} (L^{N_r} − 1)·L^{θ(s/r)}.
/// Returns L^d for D ≤ 1 (regular quotient); throws NotKlt for 2 ≤ D ≤ p−1.
RatFunc mst_alpha(const RepSpec& s);

/// The same invariant from the sum over nonempty subsets S of I*,
///   Σ_S L^{l−1}(L−1)^{|S|}/(1 − L^{−1−γ}) · Σ_{y∈(1/g_S)Z∩(0,1]} L^{θ(y)},
/// enumerating all 2^{|I*|} − 1 subsets. Serves as an independent route
/// to cross-check mst_alpha.
RatFunc mst_alpha_subsets(const RepSpec& s, int64_t subset_cap = 20);

/// Closed form of mst(A/(Z/p, d)):
///   L^d + L^{l−1}(L−1)·Σ_{j=1}^{p−1} L^{j−sht(j)} / (1 − L^{p−1−D}).
RatFunc mst_zp(const RepSpec& s);

struct MstComparison {
    bool rf_equal;        // mst_alpha = mst_zp as rational functions
    bool multisets_equal; // the conjecture's two multisets agree
    bool consistent;      // the two booleans agree (instance-wise equivalence)
};

MstComparison compare_mst(const RepSpec& s);

/// Stringy Euler number D/(D−p+1), cross-checked against the value of the
/// reduced invariant at L = 1.
Fraction stringy_euler(const RepSpec& s);
Fraction stringy_euler(const RepSpec& s, const RatFunc& mst);

/// Origin-restricted invariant: (full − L^d + L^l)·L^{−l}.
RatFunc mst_at_origin(const RepSpec& s, const RatFunc& full);

} // namespace stringy
