#include "stringy/laurent.hpp"

#include <sstream>

namespace stringy {

LaurentPoly LaurentPoly::term(int64_t exp, const mpz_class& coeff) {
    LaurentPoly p;
    if (coeff != 0)
        p.coeffs_.emplace(exp, coeff);
    return p;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

int64_t LaurentPoly::max_exp() const {
    if (is_zero())
        raise(ErrorCode::Internal, "max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

int64_t LaurentPoly::min_exp() const {
    if (is_zero())
        raise(ErrorCode::Internal, "min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

mpz_class LaurentPoly::coeff(int64_t exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

const mpz_class& LaurentPoly::leading_coeff() const {
    if (is_zero())
        raise(ErrorCode::Internal, "leading_coeff of zero polynomial");
    return coeffs_.rbegin()->second;
}

const mpz_class& LaurentPoly::trailing_coeff() const {
    if (is_zero())
        raise(ErrorCode::Internal, "trailing_coeff of zero polynomial");
    return coeffs_.begin()->second;
}

void LaurentPoly::add_term(int64_t exp, const mpz_class& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = coeffs_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_)
        r.coeffs_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_)
        add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero())
        return LaurentPoly();

    // Dense convolution when both factors are dense enough for the map
    // overhead to dominate.
    const size_t pairs = a.term_count() * b.term_count();
    const int64_t span_a = a.max_exp() - a.min_exp() + 1;
    const int64_t span_b = b.max_exp() - b.min_exp() + 1;
    if (pairs > 4096 && span_a + span_b < 1 << 22) {
        std::vector<mpz_class> da = a.dense();
        std::vector<mpz_class> db = b.dense();
        std::vector<mpz_class> out(da.size() + db.size() - 1);
        for (size_t i = 0; i < da.size(); ++i) {
            if (da[i] == 0)
                continue;
            for (size_t j = 0; j < db.size(); ++j) {
                if (db[j] != 0)
                    out[i + j] += da[i] * db[j];
            }
        }
        LaurentPoly r;
        const int64_t base = a.min_exp() + b.min_exp();
        for (size_t k = 0; k < out.size(); ++k) {
            if (out[k] != 0)
                r.coeffs_.emplace(base + static_cast<int64_t>(k), std::move(out[k]));
        }
        return r;
    }

    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
    LaurentPoly r;
    if (c == 0)
        return r;
    for (const auto& [e, v] : coeffs_)
        r.coeffs_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int64_t k) const {
    LaurentPoly r;
    for (const auto& [e, v] : coeffs_)
        r.coeffs_.emplace(e + k, v);
    return r;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Fraction LaurentPoly::eval(const Fraction& x) const {
    if (is_zero())
        return Fraction(0);
    if (x.is_zero()) {
        if (min_exp() < 0)
            raise(ErrorCode::PoleAtPoint, "negative exponent evaluated at 0");
        return Fraction(coeff(0));
    }
    // Horner over the dense span, then multiply by x^min_exp.
    Fraction acc(0);
    int64_t prev = max_exp();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        for (int64_t e = prev; e > it->first; --e)
            acc *= x;
        acc += Fraction(it->second);
        prev = it->first;
    }
    int64_t m = min_exp();
    Fraction unit = m >= 0 ? x : Fraction(1) / x;
    for (int64_t i = 0; i < (m >= 0 ? m : -m); ++i)
        acc *= unit;
    return acc;
}

std::vector<mpz_class> LaurentPoly::dense() const {
    if (is_zero())
        return {};
    std::vector<mpz_class> v(static_cast<size_t>(max_exp() - min_exp() + 1));
    for (const auto& [e, c] : coeffs_)
        v[static_cast<size_t>(e - min_exp())] = c;
    return v;
}

std::string LaurentPoly::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first)
            out << (c > 0 ? " + " : " - ");
        else if (c < 0)
            out << "-";
        mpz_class a = abs(c);
        if (a != 1 || e == 0)
            out << a.get_str();
        if (e != 0) {
            if (a != 1)
                out << "*";
            out << "L";
            if (e != 1)
                out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

LaurentPoly lp_pow(const LaurentPoly& base, uint64_t n) {
    LaurentPoly result = LaurentPoly::one();
    LaurentPoly b = base;
    while (n > 0) {
        if (n & 1)
            result *= b;
        n >>= 1;
        if (n > 0)
            b *= b;
    }
    return result;
}

} // namespace stringy
