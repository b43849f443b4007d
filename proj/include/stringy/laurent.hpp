#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "stringy/fraction.hpp"

namespace stringy {

/// Integer-coefficient Laurent polynomial in the formal variable L.
/// Stored as exponent → nonzero coefficient; the empty map is zero.
class LaurentPoly {
public:
    LaurentPoly() = default;

    /// c·L^e (normalizes away c = 0).
    static LaurentPoly term(int64_t exp, const mpz_class& coeff);
    static LaurentPoly constant(const mpz_class& c) { return term(0, c); }
    static LaurentPoly one() { return term(0, 1); }
    static LaurentPoly variable() { return term(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    /// Largest exponent; valid only for nonzero polynomials.
    int64_t max_exp() const;
    /// Smallest exponent; valid only for nonzero polynomials.
    int64_t min_exp() const;

    mpz_class coeff(int64_t exp) const;
    const mpz_class& leading_coeff() const;
    const mpz_class& trailing_coeff() const;
    size_t term_count() const { return coeffs_.size(); }

    const std::map<int64_t, mpz_class>& terms() const { return coeffs_; }

    void add_term(int64_t exp, const mpz_class& coeff);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly scaled(const mpz_class& c) const;

    /// L^k · p.
    LaurentPoly shifted(int64_t k) const;

    /// gcd of all coefficients (nonnegative; 0 for the zero polynomial).
    mpz_class content() const;

    Fraction eval(const Fraction& x) const;

    /// Coefficients as a dense vector over [min_exp, max_exp].
    std::vector<mpz_class> dense() const;

    std::string to_string() const;

private:
    std::map<int64_t, mpz_class> coeffs_;
};

LaurentPoly lp_pow(const LaurentPoly& base, uint64_t n);

/// Primitive gcd (positive leading coefficient, min exponent 0) of the
/// polynomial parts of a and b; monomial factors are units and ignored.
/// Returns 0 for gcd(0, 0).
LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient a/b when b divides a exactly over Q and the quotient has
/// integer coefficients; false otherwise. Used for gcd verification and
/// the reduction step of rational functions.
bool lp_div_exact(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient);

/// Reference gcd by the rational-coefficient Euclidean algorithm; always
/// correct but slow on large inputs. Exposed for cross-checking.
LaurentPoly lp_gcd_rational_euclid(const LaurentPoly& a, const LaurentPoly& b);

} // namespace stringy
