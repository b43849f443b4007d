#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "stringy/laurent.hpp"

namespace stringy {

/// Finite multiset of integers: value → multiplicity (> 0).
class IntMultiset {
public:
    IntMultiset() = default;
    IntMultiset(std::initializer_list<int64_t> values) {
        for (int64_t v : values)
            insert(v);
    }

    /// The integer interval ⟦lo, hi⟧; empty when lo > hi.
    static IntMultiset interval(int64_t lo, int64_t hi) {
        IntMultiset m;
        for (int64_t v = lo; v <= hi; ++v)
            m.insert(v);
        return m;
    }

    void insert(int64_t value, int64_t multiplicity = 1);

    int64_t multiplicity(int64_t value) const {
        auto it = counts_.find(value);
        return it == counts_.end() ? 0 : it->second;
    }

    int64_t cardinality() const;
    bool empty() const { return counts_.empty(); }

    const std::map<int64_t, int64_t>& counts() const { return counts_; }

    friend bool operator==(const IntMultiset& a, const IntMultiset& b) {
        return a.counts_ == b.counts_;
    }
    friend bool operator!=(const IntMultiset& a, const IntMultiset& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::map<int64_t, int64_t> counts_;
};

IntMultiset ms_union(const IntMultiset& a, const IntMultiset& b);
bool ms_eq(const IntMultiset& a, const IntMultiset& b);

/// Signed multiplicity deltas (a minus b), only for values where they differ.
std::map<int64_t, int64_t> ms_diff(const IntMultiset& a, const IntMultiset& b);

/// Σ multiplicity·L^value.
LaurentPoly ms_to_poly(const IntMultiset& m);

} // namespace stringy
