#pragma once

// Reference implementations used only by tests. These stay independent of
// the library code paths they are checking.

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "stringy/laurent.hpp"

namespace test_oracle {

// Schoolbook polynomial division over Q on the polynomial parts, returning
// the quotient only when the remainder vanishes and the quotient has
// integer coefficients.
inline std::optional<stringy::LaurentPoly> divide(const stringy::LaurentPoly& a,
                                                  const stringy::LaurentPoly& b) {
    using stringy::LaurentPoly;
    if (b.is_zero())
        return std::nullopt;
    if (a.is_zero())
        return LaurentPoly();

    std::vector<mpq_class> rem;
    for (const auto& c : a.dense())
        rem.emplace_back(c);
    std::vector<mpq_class> div;
    for (const auto& c : b.dense())
        div.emplace_back(c);
    if (rem.size() < div.size())
        return std::nullopt;

    const size_t db = div.size() - 1;
    std::vector<mpq_class> quot(rem.size() - div.size() + 1);
    for (size_t k = quot.size(); k-- > 0;) {
        mpq_class factor = rem[k + db] / div[db];
        quot[k] = factor;
        for (size_t i = 0; i <= db; ++i)
            rem[k + i] -= factor * div[i];
    }
    for (const auto& v : rem)
        if (v != 0)
            return std::nullopt;

    LaurentPoly q;
    for (size_t i = 0; i < quot.size(); ++i) {
        mpq_class v = quot[i];
        v.canonicalize();
        if (v.get_den() != 1)
            return std::nullopt;
        q.add_term(static_cast<int64_t>(i), mpz_class(v.get_num()));
    }
    return q.shifted(a.min_exp() - b.min_exp());
}

inline int64_t totient(int64_t n) {
    int64_t result = n;
    int64_t m = n;
    for (int64_t f = 2; f * f <= m; ++f) {
        if (m % f == 0) {
            while (m % f == 0)
                m /= f;
            result -= result / f;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

inline int64_t totient_sum(int64_t m) {
    int64_t sum = 0;
    for (int64_t r = 1; r <= m; ++r)
        sum += totient(r);
    return sum;
}

inline stringy::LaurentPoly random_poly(std::mt19937_64& rng, int max_terms, int64_t exp_lo,
                                        int64_t exp_hi, int64_t coeff_bound,
                                        bool allow_zero = true) {
    std::uniform_int_distribution<int> terms(allow_zero ? 0 : 1, max_terms);
    std::uniform_int_distribution<int64_t> exp(exp_lo, exp_hi);
    std::uniform_int_distribution<int64_t> coeff(-coeff_bound, coeff_bound);
    stringy::LaurentPoly p;
    int n = terms(rng);
    for (int i = 0; i < n; ++i)
        p.add_term(exp(rng), mpz_class(coeff(rng)));
    if (!allow_zero && p.is_zero())
        p.add_term(exp(rng), 1);
    return p;
}

} // namespace test_oracle
