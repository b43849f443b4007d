#include "stringy/mst.hpp"

#include <numeric>

#include "stringy/arithfns.hpp"
#include "stringy/conjecture.hpp"
#include "stringy/farey.hpp"

namespace stringy {

namespace {

// Returns L^d when the quotient is regular (D ≤ 1); throws for the
// non-klt range 2 ≤ D ≤ p−1 where the invariant is undefined.
bool handle_degenerate(const RepSpec& s, RatFunc& out) {
    if (s.bold_d() <= 1) {
        out = RatFunc::monomial(s.total_dim());
        return true;
    }
    if (s.bold_d() <= s.p() - 1)
        raise(ErrorCode::NotKlt,
              "D = " + std::to_string(s.bold_d()) + " <= p-1 for " + s.to_string());
    return false;
}

LaurentPoly geometric_denominator(const RepSpec& s) {
    // 1 − L^{−1−γ}; note p − 1 − D = −1 − γ, so both closed forms share it.
    LaurentPoly den = LaurentPoly::one();
    den -= LaurentPoly::term(-1 - s.gamma(), 1);
    return den;
}

// Σ_{y ∈ (1/g)Z ∩ (0,1]} L^{θ(y)}.
LaurentPoly theta_sum_over_multiples(const RepSpec& s, int64_t g) {
    LaurentPoly sum;
    for (int64_t k = 1; k <= g; ++k)
        sum.add_term(theta(s, Fraction(k, g)), 1);
    return sum;
}

} // namespace

RatFunc mst_alpha(const RepSpec& s) {
    RatFunc degenerate;
    if (handle_degenerate(s, degenerate))
        return degenerate;

    LaurentPoly sum;
    FareySeq f = farey_seq(s.max_part());
    for (const Fraction& y : f.elems) {
        int64_t t = theta(s, y);
        int64_t n = s.n_r(mpz_to_i64(y.den()));
        sum.add_term(t + n, 1);
        sum.add_term(t, -1);
    }
    RatFunc tail(sum.shifted(s.block_count() - 1), geometric_denominator(s));
    return RatFunc(LaurentPoly::term(s.total_dim(), 1) -
                   LaurentPoly::term(s.block_count(), 1)) +
           tail;
}

RatFunc mst_alpha_subsets(const RepSpec& s, int64_t subset_cap) {
    RatFunc degenerate;
    if (handle_degenerate(s, degenerate))
        return degenerate;

    const int64_t n_star = s.n_r(1); // |I*|
    if (n_star > subset_cap || n_star > 24)
        raise(ErrorCode::SubsetCapExceeded,
              "|I*| = " + std::to_string(n_star) + " exceeds cap " +
                  std::to_string(std::min<int64_t>(subset_cap, 24)));

    // Second coordinates of I*, flattened; the block index never enters
    // the gcd.
    std::vector<int64_t> indices;
    for (int64_t d : s.parts())
        for (int64_t i = 1; i <= d; ++i)
            indices.push_back(i);

    // Count subsets by (cardinality, gcd) instead of accumulating one
    // polynomial per subset.
    const int64_t max_g = s.max_part();
    std::vector<std::vector<int64_t>> count(
        static_cast<size_t>(n_star) + 1,
        std::vector<int64_t>(static_cast<size_t>(max_g) + 1, 0));
    std::vector<int64_t> gcd_of_mask(size_t(1) << n_star, 0);
    for (uint64_t mask = 1; mask < (uint64_t(1) << n_star); ++mask) {
        uint64_t low = mask & (~mask + 1);
        int bit = std::countr_zero(mask);
        gcd_of_mask[mask] = std::gcd(gcd_of_mask[mask ^ low], indices[static_cast<size_t>(bit)]);
        ++count[static_cast<size_t>(std::popcount(mask))]
               [static_cast<size_t>(gcd_of_mask[mask])];
    }

    std::vector<LaurentPoly> theta_sums(static_cast<size_t>(max_g) + 1);
    for (int64_t g = 1; g <= max_g; ++g)
        theta_sums[static_cast<size_t>(g)] = theta_sum_over_multiples(s, g);

    const LaurentPoly l_minus_1 = LaurentPoly::variable() - LaurentPoly::one();
    LaurentPoly total;
    LaurentPoly power = LaurentPoly::one();
    for (int64_t size = 1; size <= n_star; ++size) {
        power *= l_minus_1; // (L−1)^size
        for (int64_t g = 1; g <= max_g; ++g) {
            int64_t c = count[static_cast<size_t>(size)][static_cast<size_t>(g)];
            if (c != 0)
                total += (power * theta_sums[static_cast<size_t>(g)]).scaled(c);
        }
    }

    RatFunc tail(total.shifted(s.block_count() - 1), geometric_denominator(s));
    return RatFunc(LaurentPoly::term(s.total_dim(), 1) -
                   LaurentPoly::term(s.block_count(), 1)) +
           tail;
}

RatFunc mst_zp(const RepSpec& s) {
    RatFunc degenerate;
    if (handle_degenerate(s, degenerate))
        return degenerate;

    LaurentPoly sum;
    for (int64_t j = 1; j <= s.p() - 1; ++j)
        sum.add_term(j - sht(s, j), 1);
    LaurentPoly num =
        (LaurentPoly::variable() - LaurentPoly::one()) * sum.shifted(s.block_count() - 1);
    RatFunc tail(num, geometric_denominator(s));
    return RatFunc(LaurentPoly::term(s.total_dim(), 1)) + tail;
}

MstResult compute_mst(const RepSpec& s, MstVariant variant, int64_t subset_cap) {
    switch (variant) {
    case MstVariant::alpha_closed: return {mst_alpha(s), s, variant};
    case MstVariant::alpha_subsets: return {mst_alpha_subsets(s, subset_cap), s, variant};
    case MstVariant::zp_closed: return {mst_zp(s), s, variant};
    }
    raise(ErrorCode::Internal, "unknown variant");
}

MstComparison compare_mst(const RepSpec& s) {
    if (s.gamma() < 0)
        raise(ErrorCode::GammaNegative,
              "gamma = " + std::to_string(s.gamma()) + " for " + s.to_string());
    MstComparison cmp{};
    cmp.rf_equal = rf_eq(mst_alpha(s), mst_zp(s));
    cmp.multisets_equal = ms_eq(lhs_multiset(s), rhs_multiset(s));
    cmp.consistent = (cmp.rf_equal == cmp.multisets_equal);
    return cmp;
}

Fraction stringy_euler(const RepSpec& s, const RatFunc& mst) {
    if (s.bold_d() < s.p())
        raise(ErrorCode::NotKlt,
              "Euler number needs D >= p, got D = " + std::to_string(s.bold_d()));
    Fraction formula(mpz_class(s.bold_d()), mpz_class(s.gamma() + 1));
    Fraction at_one = mst.eval(Fraction(1));
    if (formula != at_one)
        raise(ErrorCode::Internal,
              "Euler number mismatch: formula " + formula.to_string() + " vs mst(1) = " +
                  at_one.to_string() + " for " + s.to_string());
    return formula;
}

Fraction stringy_euler(const RepSpec& s) { return stringy_euler(s, mst_alpha(s)); }

RatFunc mst_at_origin(const RepSpec& s, const RatFunc& full) {
    RatFunc shifted = full - RatFunc::monomial(s.total_dim()) + RatFunc::monomial(s.block_count());
    return shifted * RatFunc::monomial(-s.block_count());
}

} // namespace stringy
