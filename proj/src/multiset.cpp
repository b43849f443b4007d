#include "stringy/multiset.hpp"

#include <sstream>

namespace stringy {

void IntMultiset::insert(int64_t value, int64_t multiplicity) {
    if (multiplicity < 0)
        raise(ErrorCode::Internal, "negative multiplicity");
    if (multiplicity == 0)
        return;
    counts_[value] += multiplicity;
}

int64_t IntMultiset::cardinality() const {
    int64_t total = 0;
    for (const auto& [v, m] : counts_)
        total += m;
    return total;
}

std::string IntMultiset::to_string() const {
    std::ostringstream out;
    out << "{{";
    bool first = true;
    for (const auto& [v, m] : counts_) {
        for (int64_t i = 0; i < m; ++i) {
            if (!first)
                out << ", ";
            out << v;
            first = false;
        }
    }
    out << "}}";
    return out.str();
}

IntMultiset ms_union(const IntMultiset& a, const IntMultiset& b) {
    IntMultiset r = a;
    for (const auto& [v, m] : b.counts())
        r.insert(v, m);
    return r;
}

bool ms_eq(const IntMultiset& a, const IntMultiset& b) { return a == b; }

std::map<int64_t, int64_t> ms_diff(const IntMultiset& a, const IntMultiset& b) {
    std::map<int64_t, int64_t> d;
    for (const auto& [v, m] : a.counts())
        d[v] += m;
    for (const auto& [v, m] : b.counts())
        d[v] -= m;
    for (auto it = d.begin(); it != d.end();) {
        if (it->second == 0)
            it = d.erase(it);
        else
            ++it;
    }
    return d;
}

LaurentPoly ms_to_poly(const IntMultiset& m) {
    LaurentPoly p;
    for (const auto& [v, mult] : m.counts())
        p.add_term(v, mpz_class(mult));
    return p;
}

} // namespace stringy
