#include "stringy/arithfns.hpp"

namespace stringy {

int64_t sht(const RepSpec& s, int64_t j) {
    if (j < 1)
        raise(ErrorCode::OutOfDomain, "sht requires j >= 1, got " + std::to_string(j));
    int64_t total = 0;
    for (int64_t d : s.parts())
        for (int64_t i = 1; i <= d; ++i)
            total += (i * j) / s.p();
    return total;
}

int64_t theta(const RepSpec& s, const Fraction& y) {
    if (y <= Fraction(0) || y > Fraction(1))
        raise(ErrorCode::OutOfDomain, "theta requires 0 < y <= 1, got " + y.to_string());
    Fraction py = Fraction(s.p()) * y;
    int64_t value = 1 - y.floor_i64() + py.floor_i64();
    for (int64_t d : s.parts())
        for (int64_t i = 1; i <= d; ++i)
            value -= (Fraction(i) * y).floor_i64();
    return value;
}

Fraction frac_prime(const Fraction& x) {
    if (x.is_integer())
        return Fraction(1);
    return x - Fraction(x.floor());
}

} // namespace stringy
