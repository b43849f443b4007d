#pragma once

#include "stringy/laurent.hpp"

namespace stringy {

/// Quotient of Laurent polynomials in canonical reduced form:
///   - numerator and denominator have no common polynomial factor over Q,
///   - no negative exponents and min(min_exp(num), min_exp(den)) = 0,
///   - the pair has integer coefficients of overall content 1,
///   - the denominator's lowest-degree coefficient is positive.
/// Equality of values is then syntactic equality of representations.
class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly::one()) {}
    RatFunc(const LaurentPoly& num) : RatFunc(num, LaurentPoly::one()) {} // NOLINT
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);

    static RatFunc constant(const mpz_class& c) { return RatFunc(LaurentPoly::constant(c)); }
    static RatFunc monomial(int64_t exp) { return RatFunc(LaurentPoly::term(exp, 1)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    /// Exact value at x, cancelling any removable (L − x) factors first.
    Fraction eval(const Fraction& x) const;

    std::string to_string() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

/// Value equality: a.num·b.den = b.num·a.den as polynomials. For canonical
/// representations this coincides with operator==, which is tried first.
bool rf_eq(const RatFunc& a, const RatFunc& b);

} // namespace stringy
