#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "stringy/errors.hpp"

namespace stringy {

/// Exact rational in lowest terms. Denominator is always positive and
/// zero is stored as 0/1 (the canonical form GMP maintains).
class Fraction {
public:
    Fraction() : q_(0) {}
    Fraction(long n) : q_(n) {}                       // NOLINT(google-explicit-constructor)
    Fraction(const mpz_class& n) : q_(n) {}           // NOLINT(google-explicit-constructor)

    Fraction(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            raise(ErrorCode::ZeroDenominator, "fraction with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    Fraction(long num, long den) : Fraction(mpz_class(num), mpz_class(den)) {}

    /// Parses "a/b" or "a".
    static Fraction parse(const std::string& text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// ⌊x⌋ (Euclidean, rounds toward −∞).
    mpz_class floor() const {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return f;
    }

    int64_t floor_i64() const;

    /// Exact int64 value; the fraction must be an integer that fits.
    int64_t to_i64() const;

    Fraction operator-() const { return Fraction(mpq_class(-q_)); }
    Fraction& operator+=(const Fraction& o) { q_ += o.q_; return *this; }
    Fraction& operator-=(const Fraction& o) { q_ -= o.q_; return *this; }
    Fraction& operator*=(const Fraction& o) { q_ *= o.q_; return *this; }
    Fraction& operator/=(const Fraction& o) {
        if (o.q_ == 0)
            raise(ErrorCode::ZeroDenominator, "division of fractions by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
    friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
    friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
    friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }

    friend bool operator==(const Fraction& a, const Fraction& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return a.q_ != b.q_; }
    friend bool operator<(const Fraction& a, const Fraction& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Fraction& a, const Fraction& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return a.q_ >= b.q_; }

    std::string to_string() const;

private:
    explicit Fraction(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

int64_t mpz_to_i64(const mpz_class& z);

} // namespace stringy
