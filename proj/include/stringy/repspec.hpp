#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stringy/errors.hpp"

namespace stringy {

bool is_prime(int64_t n);

/// The input datum: a prime p and the block-dimension vector d with
/// 0 ≤ d_λ ≤ p−1. Everything else in the library derives from this.
class RepSpec {
public:
    RepSpec(int64_t p, std::vector<int64_t> parts);

    /// Builds from the d⁺ convention (d⁺_λ = d_λ + 1, entries in [1, p]).
    static RepSpec from_plus(int64_t p, const std::vector<int64_t>& plus_parts);

    int64_t p() const { return p_; }
    const std::vector<int64_t>& parts() const { return parts_; }
    std::vector<int64_t> plus_parts() const;

    int64_t block_count() const { return static_cast<int64_t>(parts_.size()); } // l
    int64_t total_dim() const;                                                  // d = Σ(1+d_λ)
    int64_t bold_d() const;                                                     // Σ d_λ(d_λ+1)/2
    int64_t gamma() const { return bold_d() - p_; }
    int64_t max_part() const;                                                   // M

    /// |Λ_r| = number of index pairs (λ, i), 1 ≤ i ≤ d_λ, with r | i.
    int64_t n_r(int64_t r) const;

    std::string to_string() const;

private:
    int64_t p_;
    std::vector<int64_t> parts_;
};

} // namespace stringy
