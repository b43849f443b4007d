#include "stringy/fraction.hpp"

#include <limits>

namespace stringy {

int64_t mpz_to_i64(const mpz_class& z) {
    if (!z.fits_slong_p())
        raise(ErrorCode::Internal, "integer does not fit in 64 bits: " + z.get_str());
    long v = z.get_si();
    return static_cast<int64_t>(v);
}

Fraction Fraction::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Fraction(mpz_class(text));
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        return Fraction(num, den);
    } catch (const std::invalid_argument&) {
        raise(ErrorCode::OutOfDomain, "cannot parse fraction: " + text);
    }
}

int64_t Fraction::floor_i64() const { return mpz_to_i64(floor()); }

int64_t Fraction::to_i64() const {
    if (!is_integer())
        raise(ErrorCode::FractionalExponent, "expected an integer, got " + to_string());
    return mpz_to_i64(num());
}

std::string Fraction::to_string() const {
    if (is_integer())
        return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

} // namespace stringy
