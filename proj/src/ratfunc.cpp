#include "stringy/ratfunc.hpp"

#include <algorithm>

namespace stringy {

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero())
        raise(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly::one();
        return;
    }

    // Split off monomial units, then cancel the polynomial gcd.
    LaurentPoly n = num.shifted(-num.min_exp());
    LaurentPoly d = den.shifted(-den.min_exp());
    int64_t net_shift = num.min_exp() - den.min_exp();

    LaurentPoly g = lp_gcd(n, d);
    if (!g.is_one()) {
        LaurentPoly qn, qd;
        if (!lp_div_exact(n, g, qn) || !lp_div_exact(d, g, qd))
            raise(ErrorCode::Internal, "gcd does not divide its arguments");
        n = qn;
        d = qd;
    }

    if (net_shift >= 0)
        n = n.shifted(net_shift);
    else
        d = d.shifted(-net_shift);

    mpz_class content;
    mpz_gcd(content.get_mpz_t(), n.content().get_mpz_t(), d.content().get_mpz_t());
    if (d.trailing_coeff() < 0)
        content = -content;
    if (content != 1) {
        LaurentPoly qn, qd;
        LaurentPoly c = LaurentPoly::constant(content);
        if (!lp_div_exact(n, c, qn) || !lp_div_exact(d, c, qd))
            raise(ErrorCode::Internal, "content does not divide coefficients");
        n = qn;
        d = qd;
    }

    num_ = n;
    den_ = d;
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero())
        raise(ErrorCode::ZeroDenominator, "division of rational functions by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool rf_eq(const RatFunc& a, const RatFunc& b) {
    if (a == b)
        return true;
    return a.num() * b.den() == b.num() * a.den();
}

namespace {

// Synthetic division by (L − x) over Q on a dense coefficient vector
// (index = degree). Returns false when x is not a root.
bool divide_by_root(std::vector<mpq_class>& coeffs, const mpq_class& x) {
    if (coeffs.empty())
        return false;
    std::vector<mpq_class> quot(coeffs.size() - 1);
    mpq_class carry = 0;
    for (size_t i = coeffs.size(); i-- > 1;) {
        carry = coeffs[i] + carry * x;
        quot[i - 1] = carry;
    }
    mpq_class rem = coeffs[0] + carry * x;
    if (rem != 0)
        return false;
    coeffs = std::move(quot);
    return true;
}

mpq_class eval_dense(const std::vector<mpq_class>& coeffs, const mpq_class& x) {
    mpq_class acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;)
        acc = acc * x + coeffs[i];
    return acc;
}

} // namespace

Fraction RatFunc::eval(const Fraction& x) const {
    if (num_.is_zero())
        return Fraction(0);

    mpq_class xq(x.num(), x.den());
    xq.canonicalize();

    std::vector<mpz_class> nd = num_.dense();
    std::vector<mpz_class> dd = den_.dense();
    std::vector<mpq_class> n(nd.begin(), nd.end());
    std::vector<mpq_class> d(dd.begin(), dd.end());

    // Canonical form has no negative exponents, but the numerator may carry
    // a monomial factor: account for L^min_exp at the end.
    int64_t shift = num_.min_exp() - den_.min_exp();

    // Cancel removable (L − x) factors; x = 0 never reaches this loop since
    // dense parts have nonzero trailing coefficients.
    mpq_class dv = eval_dense(d, xq);
    while (dv == 0) {
        mpq_class nv = eval_dense(n, xq);
        if (nv != 0)
            raise(ErrorCode::PoleAtPoint, "pole at L = " + x.to_string());
        if (!divide_by_root(n, xq) || !divide_by_root(d, xq))
            raise(ErrorCode::Internal, "inconsistent root cancellation");
        dv = eval_dense(d, xq);
    }
    mpq_class nv = eval_dense(n, xq);

    if (shift != 0) {
        if (x.is_zero()) {
            if (shift < 0)
                raise(ErrorCode::PoleAtPoint, "pole at L = 0");
            if (shift > 0)
                nv = 0;
        } else {
            mpq_class unit = shift > 0 ? xq : mpq_class(1) / xq;
            for (int64_t i = 0; i < (shift > 0 ? shift : -shift); ++i)
                nv *= unit;
        }
    }

    mpq_class result = nv / dv;
    result.canonicalize();
    return Fraction(result.get_num(), result.get_den());
}

std::string RatFunc::to_string() const {
    if (is_polynomial())
        return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

} // namespace stringy
