#include <doctest.h>

#include <algorithm>
#include <random>

#include "stringy/arithfns.hpp"
#include "stringy/farey.hpp"

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

RepSpec random_spec(std::mt19937_64& rng, bool nonzero_max = true) {
    const int64_t primes[] = {3, 5, 7, 11, 13, 17};
    std::uniform_int_distribution<size_t> pick(0, std::size(primes) - 1);
    int64_t p = primes[pick(rng)];
    std::uniform_int_distribution<int64_t> blocks(1, 3);
    int64_t l = blocks(rng);
    std::uniform_int_distribution<int64_t> part(0, p - 1);
    std::vector<int64_t> parts;
    for (int64_t i = 0; i < l; ++i)
        parts.push_back(part(rng));
    if (nonzero_max && *std::max_element(parts.begin(), parts.end()) == 0)
        parts[0] = 1;
    return RepSpec(p, parts);
}

} // namespace

TEST_CASE("sht on the worked example") {
    RepSpec s(7, {5});
    for (int64_t j = 1; j <= 6; ++j)
        CHECK(j - sht(s, j) == 2 - j);
    CHECK(sht(s, 2) == 2);
    CHECK(sht(s, 6) == 10);
}

TEST_CASE("sht vanishes while every floor is zero") {
    RepSpec s(31, {5});
    for (int64_t j = 1; j <= 6; ++j)
        CHECK(sht(s, j) == 0);
    CHECK(throws_code(ErrorCode::OutOfDomain, [&] { sht(s, 0); }));
}

TEST_CASE("sht reflection") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        RepSpec s = random_spec(rng);
        for (int64_t j = 1; j < s.p(); ++j)
            CHECK(sht(s, s.p() - j) == s.bold_d() - s.n_r(1) - sht(s, j));
    }
}

TEST_CASE("theta on the worked example") {
    RepSpec s(7, {5});
    CHECK(theta(s, Fraction(1, 5)) == 1);
    CHECK(theta(s, Fraction(1, 4)) == 0);
    CHECK(theta(s, Fraction(1, 3)) == 0);
    CHECK(theta(s, Fraction(2, 5)) == -1);
    CHECK(theta(s, Fraction(1, 2)) == -2);
    CHECK(theta(s, Fraction(3, 5)) == -2);
    CHECK(theta(s, Fraction(2, 3)) == -3);
    CHECK(theta(s, Fraction(3, 4)) == -3);
    CHECK(theta(s, Fraction(4, 5)) == -4);
    CHECK(theta(s, Fraction(1)) == -8);
}

TEST_CASE("theta at 1 is p minus D") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        RepSpec s = random_spec(rng, false);
        CHECK(theta(s, Fraction(1)) == s.p() - s.bold_d());
    }
}

TEST_CASE("theta with two blocks") {
    RepSpec s(7, {3, 2});
    CHECK(theta(s, Fraction(1, 2)) == 1);
}

TEST_CASE("theta domain") {
    RepSpec s(7, {5});
    CHECK(throws_code(ErrorCode::OutOfDomain, [&] { theta(s, Fraction(0)); }));
    CHECK(throws_code(ErrorCode::OutOfDomain, [&] { theta(s, Fraction(3, 2)); }));
    CHECK(throws_code(ErrorCode::OutOfDomain, [&] { theta(s, Fraction(-1, 2)); }));
}

TEST_CASE("summing over I or I* makes no difference") {
    // The definition is stated both with and without the i = 0 indices;
    // zero indices contribute ⌊0⌋ = 0, so the variants agree.
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        RepSpec s = random_spec(rng);
        std::uniform_int_distribution<int64_t> num(1, s.p());
        Fraction y(num(rng), s.p());
        if (y > Fraction(1))
            y = Fraction(1);

        Fraction py = Fraction(s.p()) * y;
        int64_t with_zero = 1 - y.floor_i64() + py.floor_i64();
        for (int64_t d : s.parts())
            for (int64_t i = 0; i <= d; ++i)
                with_zero -= (Fraction(i) * y).floor_i64();
        CHECK(theta(s, y) == with_zero);
    }
}

TEST_CASE("frac_prime") {
    CHECK(frac_prime(Fraction(3, 2)) == Fraction(1, 2));
    CHECK(frac_prime(Fraction(-2)) == Fraction(1));
    CHECK(frac_prime(Fraction(0)) == Fraction(1));
    CHECK(frac_prime(Fraction(-7, 3)) == Fraction(2, 3));

    std::mt19937_64 rng(71);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 12);
    for (int trial = 0; trial < 60; ++trial) {
        Fraction x(num(rng), den(rng));
        Fraction f = frac_prime(x);
        CHECK(f > Fraction(0));
        CHECK(f <= Fraction(1));
        CHECK((x - f).is_integer());
    }
}

TEST_CASE("theta steps down by N_r across a bucket") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        RepSpec s = random_spec(rng);
        if (s.max_part() < 1)
            continue;
        auto buckets = farey_buckets(farey_seq(s.max_part()), s.p());
        for (const auto& bucket : buckets) {
            for (size_t k = 1; k < bucket.size(); ++k) {
                int64_t r = mpz_to_i64(bucket[k].den());
                CHECK(theta(s, bucket[k]) == theta(s, bucket[k - 1]) - s.n_r(r));
            }
        }
    }
}

TEST_CASE("bucket boundary identities") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 40; ++trial) {
        RepSpec s = random_spec(rng);
        if (s.max_part() <= 1)
            continue;
        auto buckets = farey_buckets(farey_seq(s.max_part()), s.p());
        for (int64_t j = 0; j < s.p(); ++j) {
            const auto& bucket = buckets[static_cast<size_t>(j)];
            if (bucket.empty())
                continue;
            CHECK(theta(s, bucket.back()) == 1 + j - sht(s, j + 1));
            int64_t r_first = mpz_to_i64(bucket.front().den());
            CHECK(theta(s, bucket.front()) + s.n_r(r_first) - 1 == j - sht(s, j));
        }
    }
}

TEST_CASE("sht is constant on gaps and j - sht(j) non-increasing on blocks") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 40; ++trial) {
        RepSpec s = random_spec(rng);
        if (s.max_part() <= 1)
            continue;
        BlockSequences blocks = block_sequences(farey_seq(s.max_part()), s.p());
        const size_t n = blocks.a.size();
        for (size_t m = 0; m + 1 < n; ++m)
            for (int64_t j = blocks.b[m] + 1; j < blocks.a[m + 1]; ++j)
                CHECK(sht(s, j) == sht(s, j + 1));
        for (size_t m = 0; m < n; ++m)
            for (int64_t j = blocks.a[m]; j <= blocks.b[m]; ++j)
                CHECK(j - sht(s, j) >= (j + 1) - sht(s, j + 1));
    }
}
