#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "stringy/batch.hpp"

using namespace stringy;

namespace {

bool throws_code(ErrorCode code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

// Independent partition counter: iterate over all multisets via a
// different recursion shape (count only, no materialization).
int64_t count_partitions(int64_t remaining, int64_t max_part, int64_t p,
                         int64_t bold_so_far) {
    if (remaining == 0)
        return bold_so_far >= p ? 1 : 0;
    int64_t total = 0;
    for (int64_t part = 2; part <= std::min(remaining, max_part); ++part)
        total += count_partitions(remaining - part, part, p,
                                  bold_so_far + part * (part - 1) / 2);
    return total;
}

} // namespace

TEST_CASE("valid partitions of 7 for p = 7") {
    auto parts = valid_partitions(7, 7);
    std::set<std::vector<int64_t>> got(parts.begin(), parts.end());
    std::set<std::vector<int64_t>> expected{{7}, {5, 2}, {4, 3}};
    CHECK(got == expected); // (3,2,2) has D = 5 < 7 and is filtered out
}

TEST_CASE("partition edge cases") {
    CHECK(valid_partitions(7, 1).empty());
    CHECK(valid_partitions(7, 0).empty());

    // d+ = (6) qualifies: D = 15 >= 7.
    auto parts = valid_partitions(7, 6);
    CHECK(std::find(parts.begin(), parts.end(), std::vector<int64_t>{6}) != parts.end());

    for (const auto& partition : valid_partitions(11, 12)) {
        CHECK(std::is_sorted(partition.rbegin(), partition.rend()));
        for (int64_t part : partition) {
            CHECK(part >= 2);
            CHECK(part <= 11);
        }
    }
}

TEST_CASE("partition counts match an independent oracle") {
    for (int64_t p : {2, 3, 5, 7, 11, 13})
        for (int64_t total = 2; total <= 12; ++total)
            CHECK(static_cast<int64_t>(valid_partitions(p, total).size()) ==
                  count_partitions(total, std::min(total, p), p, 0));
}

TEST_CASE("small sweep is fully green") {
    BatchConfig cfg;
    cfg.prime_max = 7;
    cfg.total_dim_max = 7;
    cfg.worker_count = 2;
    BatchResult result = run_batch(cfg);
    CHECK(result.failures == 0);
    CHECK(!result.rows.empty());

    bool found_example = false;
    for (const BatchRow& row : result.rows) {
        CHECK(row.conjecture_ok);
        CHECK(row.mst_eq_ok);
        CHECK(row.conjecture_ok == row.mst_eq_ok);
        CHECK(row.micros == 0); // timings are opt-in
        if (row.p == 7 && row.d_plus == std::vector<int64_t>{6}) {
            found_example = true;
            CHECK(row.bold_d == 15);
            CHECK(row.gamma == 8);
            CHECK(row.euler == Fraction(5, 3));
            CHECK(row.mmp == MmpClass::terminal);
        }
    }
    CHECK(found_example);

    // Canonical order: p ascending, partitions lexicographic within p.
    for (size_t i = 1; i < result.rows.size(); ++i) {
        const auto& prev = result.rows[i - 1];
        const auto& cur = result.rows[i];
        CHECK((prev.p < cur.p || (prev.p == cur.p && prev.d_plus < cur.d_plus)));
    }
}

TEST_CASE("indecomposable sweep") {
    BatchConfig cfg;
    cfg.indecomposable_only = true;
    cfg.prime_max = 13;
    cfg.worker_count = 2;
    BatchResult result = run_batch(cfg);
    CHECK(result.failures == 0);
    for (const BatchRow& row : result.rows) {
        REQUIRE(row.d_plus.size() == 1);
        CHECK(row.d_plus[0] >= 3);
        CHECK(row.d_plus[0] <= row.p);
        CHECK(row.bold_d >= row.p);
        CHECK(row.conjecture_ok);
        CHECK(row.mst_eq_ok);
    }
}

TEST_CASE("reports are deterministic across worker counts") {
    BatchConfig base;
    base.prime_max = 13;
    base.total_dim_max = 9;

    BatchConfig one = base, four = base;
    one.worker_count = 1;
    four.worker_count = 4;
    BatchResult r1 = run_batch(one);
    BatchResult r4 = run_batch(four);
    CHECK(render_csv(r1) == render_csv(r4));
    CHECK(render_json(one, r1) == render_json(four, r4));
}

TEST_CASE("csv layout") {
    BatchConfig cfg;
    cfg.prime_max = 7;
    cfg.total_dim_max = 7;
    cfg.worker_count = 1;
    BatchResult result = run_batch(cfg);
    std::string csv = render_csv(result);
    CHECK(csv.rfind("p,d_plus,D,gamma,conjecture_ok,mst_eq_ok,euler_num,euler_den,mmp_class,micros\n",
                    0) == 0);
    CHECK(csv.find("7,7,21,14,true,true,7,5,terminal,0") != std::string::npos);
    CHECK(csv.find("7,5+2,") != std::string::npos);
}

TEST_CASE("report writing failures surface as IoError") {
    BatchConfig cfg;
    cfg.prime_max = 3;
    cfg.total_dim_max = 3;
    cfg.worker_count = 1;
    cfg.output_path = "/nonexistent-dir/report.csv";
    BatchResult result = run_batch(cfg);
    CHECK(throws_code(ErrorCode::IoError, [&] { write_report(cfg, result); }));
}

TEST_CASE("worker count environment override") {
    BatchConfig cfg;
    cfg.worker_count = 3;
    unsetenv("STRINGY_WORKERS");
    CHECK(effective_worker_count(cfg) == 3);
    setenv("STRINGY_WORKERS", "5", 1);
    CHECK(effective_worker_count(cfg) == 5);
    setenv("STRINGY_WORKERS", "junk", 1);
    CHECK(effective_worker_count(cfg) == 3);
    unsetenv("STRINGY_WORKERS");
}
