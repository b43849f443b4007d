#include "stringy/conjecture.hpp"

#include "stringy/arithfns.hpp"
#include "stringy/farey.hpp"

namespace stringy {

namespace {

void require_gamma(const RepSpec& s) {
    if (s.gamma() < 0)
        raise(ErrorCode::GammaNegative,
              "gamma = " + std::to_string(s.gamma()) + " for " + s.to_string());
}

} // namespace

IntMultiset lhs_multiset(const RepSpec& s) {
    require_gamma(s);
    IntMultiset m;
    for (int64_t j = 1; j <= s.p() - 1; ++j)
        m.insert(j - sht(s, j));
    m = ms_union(m, IntMultiset::interval(-s.gamma(), 0));
    return m;
}

IntMultiset rhs_multiset(const RepSpec& s) {
    require_gamma(s);
    IntMultiset m;
    FareySeq f = farey_seq(s.max_part());
    for (const Fraction& y : f.elems) {
        int64_t t = theta(s, y);
        int64_t n = s.n_r(mpz_to_i64(y.den()));
        for (int64_t i = 0; i < n; ++i)
            m.insert(t + i);
    }
    return m;
}

ConjectureReport verify_conjecture(const RepSpec& s) {
    require_gamma(s);
    ConjectureReport report{s, lhs_multiset(s), rhs_multiset(s), false, {}, {}};
    report.diff = ms_diff(report.lhs, report.rhs);
    report.equal = report.diff.empty();

    if (report.lhs.cardinality() != (s.p() - 1) + (s.gamma() + 1))
        raise(ErrorCode::Internal, "left multiset cardinality mismatch");

    if (s.max_part() <= 1) {
        report.blocks.trivial = true;
    } else {
        BlockSequences blocks = block_sequences(farey_seq(s.max_part()), s.p());
        for (size_t m = 0; m < blocks.a.size(); ++m)
            report.blocks.runs.emplace_back(blocks.a[m], blocks.b[m]);
    }
    return report;
}

IntInterval rhs_bucket_interval(const RepSpec& s, int64_t j) {
    const int64_t p = s.p();
    if (j < 0 || j > p)
        raise(ErrorCode::OutOfDomain, "bucket index must lie in [0, p]");

    if (j == p) {
        IntInterval interval{-s.gamma(), -s.gamma() + s.n_r(1) - 1};
        if (theta(s, Fraction(1)) != interval.lo)
            raise(ErrorCode::Internal, "theta(1) != -gamma");
        return interval;
    }

    if (s.max_part() < 1)
        raise(ErrorCode::EmptyBucket, "no Farey elements at all");
    auto buckets = farey_buckets(farey_seq(s.max_part()), p);
    const auto& bucket = buckets[static_cast<size_t>(j)];
    if (bucket.empty())
        raise(ErrorCode::EmptyBucket, "bucket " + std::to_string(j) + " is empty");

    const Fraction& first = bucket.front();
    const Fraction& last = bucket.back();
    IntInterval from_theta{theta(s, last),
                           theta(s, first) + s.n_r(mpz_to_i64(first.den())) - 1};
    IntInterval from_sht{j + 1 - sht(s, j + 1), j - sht(s, j)};
    if (from_theta.lo != from_sht.lo || from_theta.hi != from_sht.hi)
        raise(ErrorCode::Internal,
              "bucket interval forms disagree for " + s.to_string() + " at j = " +
                  std::to_string(j));
    return from_theta;
}

IntMultiset rhs_from_bucket_intervals(const RepSpec& s) {
    IntMultiset rebuilt = rhs_bucket_interval(s, s.p()).to_multiset();
    BlockSequences blocks = block_sequences(farey_seq(s.max_part()), s.p());
    for (size_t m = 0; m < blocks.a.size(); ++m)
        for (int64_t j = blocks.a[m]; j <= blocks.b[m]; ++j)
            rebuilt = ms_union(rebuilt, rhs_bucket_interval(s, j).to_multiset());
    return rebuilt;
}

IntMultiset lhs_block_decomposition(const RepSpec& s) {
    require_gamma(s);
    if (s.max_part() <= 1)
        raise(ErrorCode::TrivialCase, "decomposition needs max d > 1");

    BlockSequences blocks = block_sequences(farey_seq(s.max_part()), s.p());
    const int64_t a = blocks.a.front();
    const int64_t gamma = s.gamma();
    const int64_t n1 = s.n_r(1);
    const size_t n = blocks.a.size() - 1;

    IntMultiset m;
    for (size_t k = 0; k <= n; ++k)
        for (int64_t j = blocks.a[k] + 1; j <= blocks.b[k]; ++j)
            m.insert(j - sht(s, j));
    m = ms_union(m, IntMultiset::interval(-gamma - a + n1, -gamma + n1 - 1));
    m = ms_union(m, IntMultiset::interval(-gamma, a));
    for (size_t k = 0; k < n; ++k) {
        int64_t next_a = blocks.a[k + 1];
        int64_t gap_sht = sht(s, next_a);
        m = ms_union(m,
                     IntMultiset::interval(blocks.b[k] + 1 - gap_sht, next_a - gap_sht));
    }
    return m;
}

IntervalUnionCheck interval_union_identity(const std::vector<int64_t>& A,
                                           const std::vector<int64_t>& B) {
    if (A.empty() || A.size() != B.size())
        raise(ErrorCode::OutOfDomain, "A and B must be nonempty and of equal length");

    IntervalUnionCheck check{true, false};
    const size_t n = A.size();
    for (size_t m = 0; m < n; ++m) {
        int64_t next = A[(m + 1) % n];
        if (B[m] > std::min(A[m], next))
            check.precondition_ok = false;
    }

    IntMultiset left, right;
    for (size_t m = 0; m < n; ++m) {
        left = ms_union(left, IntMultiset::interval(B[m], A[m]));
        right = ms_union(right, IntMultiset::interval(B[m], A[(m + 1) % n]));
    }
    check.equal = ms_eq(left, right);
    return check;
}

} // namespace stringy
