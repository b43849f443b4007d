#include "stringy/repspec.hpp"

#include <algorithm>
#include <sstream>

namespace stringy {

bool is_prime(int64_t n) {
    if (n < 2)
        return false;
    for (int64_t f = 2; f * f <= n; ++f)
        if (n % f == 0)
            return false;
    return true;
}

RepSpec::RepSpec(int64_t p, std::vector<int64_t> parts) : p_(p), parts_(std::move(parts)) {
    if (!is_prime(p_))
        raise(ErrorCode::NotPrime, "p = " + std::to_string(p_));
    if (parts_.empty())
        raise(ErrorCode::PartOutOfRange, "block vector must be nonempty");
    for (int64_t d : parts_)
        if (d < 0 || d > p_ - 1)
            raise(ErrorCode::PartOutOfRange,
                  "d = " + std::to_string(d) + " outside [0, " + std::to_string(p_ - 1) + "]");
}

RepSpec RepSpec::from_plus(int64_t p, const std::vector<int64_t>& plus_parts) {
    if (!is_prime(p))
        raise(ErrorCode::NotPrime, "p = " + std::to_string(p));
    std::vector<int64_t> parts;
    parts.reserve(plus_parts.size());
    for (int64_t dp : plus_parts) {
        if (dp < 1 || dp > p)
            raise(ErrorCode::InvalidPlusPart,
                  "d+ = " + std::to_string(dp) + " outside [1, " + std::to_string(p) + "]");
        parts.push_back(dp - 1);
    }
    return RepSpec(p, std::move(parts));
}

std::vector<int64_t> RepSpec::plus_parts() const {
    std::vector<int64_t> plus;
    plus.reserve(parts_.size());
    for (int64_t d : parts_)
        plus.push_back(d + 1);
    return plus;
}

int64_t RepSpec::total_dim() const {
    int64_t d = 0;
    for (int64_t part : parts_)
        d += 1 + part;
    return d;
}

int64_t RepSpec::bold_d() const {
    int64_t sum = 0;
    for (int64_t d : parts_)
        sum += d * (d + 1) / 2;
    return sum;
}

int64_t RepSpec::max_part() const {
    return *std::max_element(parts_.begin(), parts_.end());
}

int64_t RepSpec::n_r(int64_t r) const {
    if (r < 1)
        raise(ErrorCode::OutOfDomain, "r must be >= 1");
    int64_t count = 0;
    for (int64_t d : parts_)
        count += d / r;
    return count;
}

std::string RepSpec::to_string() const {
    std::ostringstream out;
    out << "p=" << p_ << " d=(";
    for (size_t i = 0; i < parts_.size(); ++i)
        out << (i ? "," : "") << parts_[i];
    out << ")";
    return out.str();
}

} // namespace stringy
