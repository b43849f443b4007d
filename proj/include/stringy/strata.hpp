#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stringy/fraction.hpp"
#include "stringy/laurent.hpp"
#include "stringy/ratfunc.hpp"
#include "stringy/repspec.hpp"

namespace stringy {

/// Tame cyclic quotient singularity of type 1/n(w_1, …, w_t) with boundary
/// coefficients a_i on the coordinate divisors. Weights are stored as
/// representatives in [0, n).
struct CyclicQuotientType {
    int64_t n = 1;
    std::vector<int64_t> weights;
    std::vector<Fraction> coeffs;
};

/// A stratum of the exceptional divisor: a nonempty subset S of I* with a
/// distinguished anchor pair (σ, i) ∈ S. Pairs are 1-based: σ ∈ [1, l],
/// i ∈ [1, d_σ].
struct StratumSpec {
    std::vector<std::pair<int64_t, int64_t>> subset;
    std::pair<int64_t, int64_t> anchor;
};

/// gcd of the second coordinates of S.
int64_t subset_gcd(const StratumSpec& st);

/// The singularity type of a closed point of the stratum, or nullopt when
/// gcd(S) = 1 and the point is regular. The weight vector runs over all
/// (π, j) with j = 0..d_π: p at (σ, i−1), 1 at (σ, i), −j otherwise,
/// reduced mod gcd(S). The boundary divisor rides the anchor coordinate
/// with coefficient −γ.
std::optional<CyclicQuotientType> stratum_type(const RepSpec& s, const StratumSpec& st);

/// Class of the open stratum: L^l(L−1)^{|S|−1}.
LaurentPoly stratum_class(const RepSpec& s, const StratumSpec& st);

/// Batyrev's lattice-point formula for the local stringy invariant:
///   (L−1)^t · Π_i 1/(1 − L^{a_i−1}) · Σ_{p∈N∩(0,1]^t} L^{−φ(p)},
/// with φ(e_i) = 1 − a_i and N generated by (w_1/n, …, w_t/n) over Z^t.
RatFunc batyrev_local(const CyclicQuotientType& ct);

/// Closed form of the local invariant at a point of a stratum with
/// gcd g ≥ 2 (the Farey-free route, cross-checked against batyrev_local).
RatFunc local_mst_closed(const RepSpec& s, int64_t g);

struct Discrepancies {
    int64_t upstairs; // a(E; A^d) = D − 1
    int64_t quotient; // a(Ẽ; X)  = D − p
};

Discrepancies discrepancies(const RepSpec& s);

enum class MmpClass {
    regular,
    not_lc,
    lc_not_canonical,
    canonical_not_terminal,
    terminal,
};

const char* to_string(MmpClass c);

/// Threshold classification: lc ⇔ D ≥ p−1, canonical ⇔ D ≥ p,
/// terminal ⇔ D ≥ p+1; regular when D ≤ 1.
MmpClass classify_mmp(const RepSpec& s);

} // namespace stringy
