#pragma once

#include "stringy/fraction.hpp"
#include "stringy/repspec.hpp"

namespace stringy {

/// sht(j) = Σ_λ Σ_{i=1}^{d_λ} ⌊ij/p⌋ for j ≥ 1.
int64_t sht(const RepSpec& s, int64_t j);

/// θ(y) = 1 − ⌊y⌋ + ⌊py⌋ − Σ_{(σ,i)} ⌊iy⌋ for y ∈ (0, 1].
/// θ(1) = p − D. The sum runs over i = 1..d_σ; index pairs with i = 0
/// contribute ⌊0⌋ = 0 either way.
int64_t theta(const RepSpec& s, const Fraction& y);

/// Modified fractional part: x − ⌊x⌋ for non-integers, 1 for integers.
/// Always lands in (0, 1].
Fraction frac_prime(const Fraction& x);

} // namespace stringy
