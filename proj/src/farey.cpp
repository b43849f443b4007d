#include "stringy/farey.hpp"

#include <algorithm>
#include <numeric>

namespace stringy {

FareySeq farey_seq(int64_t m) {
    if (m < 1)
        raise(ErrorCode::InvalidOrder, "Farey order must be >= 1, got " + std::to_string(m));
    FareySeq f;
    f.order = m;
    // Brute-force enumeration with a gcd check; orders stay small enough
    // that neighbor recurrences would buy nothing.
    for (int64_t r = 1; r <= m; ++r)
        for (int64_t s = 1; s <= r; ++s)
            if (std::gcd(s, r) == 1)
                f.elems.emplace_back(s, r);
    std::sort(f.elems.begin(), f.elems.end());
    return f;
}

std::vector<std::vector<Fraction>> farey_buckets(const FareySeq& f, int64_t p) {
    if (p <= f.order)
        raise(ErrorCode::OutOfDomain,
              "bucket prime must exceed the Farey order (p = " + std::to_string(p) +
                  ", order = " + std::to_string(f.order) + ")");
    std::vector<std::vector<Fraction>> buckets(static_cast<size_t>(p) + 1);
    const Fraction one(1);
    for (const Fraction& y : f.elems) {
        if (y == one) {
            buckets[static_cast<size_t>(p)].push_back(y);
            continue;
        }
        // j/p ≤ y < (j+1)/p, i.e. j = ⌊py⌋; y < 1 keeps j < p.
        int64_t j = (Fraction(p) * y).floor_i64();
        buckets[static_cast<size_t>(j)].push_back(y);
    }
    return buckets;
}

BlockSequences block_sequences(const FareySeq& f, int64_t p) {
    auto buckets = farey_buckets(f, p);
    BlockSequences blocks;
    bool in_run = false;
    for (int64_t j = 0; j < p; ++j) {
        bool nonempty = !buckets[static_cast<size_t>(j)].empty();
        if (nonempty && !in_run) {
            blocks.a.push_back(j);
            in_run = true;
        } else if (!nonempty && in_run) {
            blocks.b.push_back(j - 1);
            in_run = false;
        }
    }
    if (in_run)
        blocks.b.push_back(p - 1);
    if (blocks.a.empty())
        raise(ErrorCode::TrivialCase,
              "all buckets below p are empty (Farey order 1); use the trivial-case path");
    return blocks;
}

} // namespace stringy
