#include "stringy/strata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "stringy/arithfns.hpp"

namespace stringy {

namespace {

void validate_subset(const RepSpec& s, const StratumSpec& st) {
    if (st.subset.empty())
        raise(ErrorCode::EmptySubset, "stratum subset must be nonempty");
    std::set<std::pair<int64_t, int64_t>> seen;
    for (const auto& [sigma, i] : st.subset) {
        if (sigma < 1 || sigma > s.block_count())
            raise(ErrorCode::OutOfDomain, "block index out of range: " + std::to_string(sigma));
        if (i < 1 || i > s.parts()[static_cast<size_t>(sigma - 1)])
            raise(ErrorCode::OutOfDomain,
                  "index " + std::to_string(i) + " out of range for block " +
                      std::to_string(sigma));
        if (!seen.insert({sigma, i}).second)
            raise(ErrorCode::OutOfDomain, "duplicate pair in stratum subset");
    }
    if (!seen.count(st.anchor))
        raise(ErrorCode::AnchorNotInSubset, "anchor pair must belong to the subset");
}

int64_t mod_reduce(int64_t v, int64_t n) {
    int64_t r = v % n;
    return r < 0 ? r + n : r;
}

} // namespace

int64_t subset_gcd(const StratumSpec& st) {
    int64_t g = 0;
    for (const auto& [sigma, i] : st.subset)
        g = std::gcd(g, i);
    return g;
}

std::optional<CyclicQuotientType> stratum_type(const RepSpec& s, const StratumSpec& st) {
    validate_subset(s, st);
    const int64_t g = subset_gcd(st);
    if (g == 1)
        return std::nullopt;

    const auto [sigma, i] = st.anchor;
    CyclicQuotientType ct;
    ct.n = g;
    for (int64_t pi = 1; pi <= s.block_count(); ++pi) {
        for (int64_t j = 0; j <= s.parts()[static_cast<size_t>(pi - 1)]; ++j) {
            int64_t v;
            if (pi == sigma && j == i - 1)
                v = s.p();
            else if (pi == sigma && j == i)
                v = 1;
            else
                v = -j;
            ct.weights.push_back(mod_reduce(v, g));
            ct.coeffs.push_back(pi == sigma && j == i ? Fraction(-s.gamma()) : Fraction(0));
        }
    }
    return ct;
}

LaurentPoly stratum_class(const RepSpec& s, const StratumSpec& st) {
    validate_subset(s, st);
    LaurentPoly l_minus_1 = LaurentPoly::variable() - LaurentPoly::one();
    return LaurentPoly::term(s.block_count(), 1) *
           lp_pow(l_minus_1, st.subset.size() - 1);
}

RatFunc batyrev_local(const CyclicQuotientType& ct) {
    const size_t t = ct.weights.size();
    if (t == 0 || ct.coeffs.size() != t)
        raise(ErrorCode::OutOfDomain, "type needs matching weight and coefficient lists");
    if (ct.n < 1)
        raise(ErrorCode::OutOfDomain, "order n must be >= 1");
    for (const Fraction& a : ct.coeffs)
        if (a >= Fraction(1))
            raise(ErrorCode::InvalidCoeff, "boundary coefficient " + a.to_string() + " >= 1");

    // Lattice points of N ∩ (0,1]^t, deduplicated: {k·w/n}' for k = 0..n−1.
    std::set<std::vector<Fraction>> points;
    for (int64_t k = 0; k < ct.n; ++k) {
        std::vector<Fraction> point;
        point.reserve(t);
        for (size_t idx = 0; idx < t; ++idx)
            point.push_back(frac_prime(Fraction(k * ct.weights[idx], ct.n)));
        points.insert(std::move(point));
    }

    LaurentPoly sum;
    for (const auto& point : points) {
        Fraction phi(0);
        for (size_t idx = 0; idx < t; ++idx)
            phi += (Fraction(1) - ct.coeffs[idx]) * point[idx];
        sum.add_term((-phi).to_i64(), 1);
    }

    LaurentPoly num =
        lp_pow(LaurentPoly::variable() - LaurentPoly::one(), t) * sum;
    LaurentPoly den = LaurentPoly::one();
    for (const Fraction& a : ct.coeffs) {
        LaurentPoly factor = LaurentPoly::one();
        factor -= LaurentPoly::term((a - Fraction(1)).to_i64(), 1);
        den *= factor;
    }
    return RatFunc(num, den);
}

RatFunc local_mst_closed(const RepSpec& s, int64_t g) {
    if (s.bold_d() <= s.p() - 1)
        raise(ErrorCode::NotKlt,
              "local invariant needs D > p-1, got D = " + std::to_string(s.bold_d()));
    if (g < 2)
        raise(ErrorCode::TrivialGcd, "closed form applies to gcd >= 2");

    const int64_t d = s.total_dim();
    LaurentPoly theta_sum;
    for (int64_t k = 1; k <= g; ++k)
        theta_sum.add_term(theta(s, Fraction(k, g)), 1);

    LaurentPoly l_minus_1 = LaurentPoly::variable() - LaurentPoly::one();
    LaurentPoly num = lp_pow(l_minus_1, static_cast<uint64_t>(d)).shifted(-d) * theta_sum;

    LaurentPoly one_minus_inv = LaurentPoly::one() - LaurentPoly::term(-1, 1);
    LaurentPoly den = lp_pow(one_minus_inv, static_cast<uint64_t>(d - 1));
    den *= LaurentPoly::one() - LaurentPoly::term(s.p() - 1 - s.bold_d(), 1);
    return RatFunc(num, den);
}

Discrepancies discrepancies(const RepSpec& s) {
    if (s.bold_d() <= 1)
        raise(ErrorCode::BelowStandingAssumption,
              "discrepancies need D >= 2, got " + std::to_string(s.bold_d()));
    return Discrepancies{s.bold_d() - 1, s.bold_d() - s.p()};
}

const char* to_string(MmpClass c) {
    switch (c) {
    case MmpClass::regular: return "regular";
    case MmpClass::not_lc: return "not_lc";
    case MmpClass::lc_not_canonical: return "lc_not_canonical";
    case MmpClass::canonical_not_terminal: return "canonical_not_terminal";
    case MmpClass::terminal: return "terminal";
    }
    return "unknown";
}

MmpClass classify_mmp(const RepSpec& s) {
    const int64_t D = s.bold_d();
    const int64_t p = s.p();
    if (D <= 1)
        return MmpClass::regular;
    if (D < p - 1)
        return MmpClass::not_lc;
    if (D == p - 1)
        return MmpClass::lc_not_canonical;
    if (D == p)
        return MmpClass::canonical_not_terminal;
    return MmpClass::terminal;
}

} // namespace stringy
