#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>

#include "fibnim/ext_nat.hpp"
#include "fibnim/fib.hpp"

using namespace fibnim;

TEST_CASE("ExtNat ordering and parsing") {
    CHECK(kInf > ExtNat{0});
    CHECK(kInf > ExtNat{~std::uint64_t{0}});
    CHECK(kInf == ExtNat::inf());
    CHECK(ExtNat{3} < ExtNat{4});
    CHECK(ExtNat::parse("inf").is_inf());
    CHECK(ExtNat::parse("INF").is_inf());
    CHECK(ExtNat::parse("∞").is_inf());
    CHECK(ExtNat::parse("12") == ExtNat{12});
    CHECK_THROWS(ExtNat::parse("-1"));
    CHECK_THROWS(ExtNat::parse("12x"));
    CHECK_THROWS(ExtNat::parse(""));
    CHECK_THROWS_AS(kInf.value(), std::logic_error);
    CHECK(kInf.value_or(7) == 7);
    CHECK(kInf.to_string() == "inf");
}

TEST_CASE("fib values and range") {
    CHECK(fib(1) == 1);
    CHECK(fib(2) == 1);
    CHECK(fib(7) == 13);
    CHECK(fib(11) == 89);
    CHECK(fib(92) == 7540113804746346429ULL);
    CHECK_THROWS(fib(0));
    CHECK_THROWS(fib(-3));
    CHECK_THROWS(fib(93));
    for (int i = 3; i <= 92; ++i) {
        REQUIRE(fib(i) == fib(i - 1) + fib(i - 2));
    }
}

TEST_CASE("fib_bracket") {
    CHECK(fib_bracket(1) == 2);
    CHECK(fib_bracket(2) == 3);
    CHECK(fib_bracket(12) == 6);
    CHECK(fib_bracket(13) == 7);
    CHECK_THROWS(fib_bracket(0));
    for (std::uint64_t r = 1; r <= 5000; ++r) {
        const int t = fib_bracket(r);
        REQUIRE(t >= 2);
        REQUIRE(fib(t) <= r);
        REQUIRE(r < fib(t + 1));
    }
}

TEST_CASE("fib_index_of") {
    CHECK(fib_index_of(1) == 2);
    CHECK(fib_index_of(89) == 11);
    CHECK(fib_index_of(4) == -1);
    CHECK(fib_index_of(0) == -1);
}

TEST_CASE("zeckendorf examples") {
    CHECK(zeckendorf(0).terms.empty());
    CHECK(zeckendorf(100).terms == std::vector<std::uint64_t>{3, 8, 89});
    CHECK(zeckendorf(100).indices == std::vector<int>{4, 6, 11});
    CHECK(zeckendorf(33).terms == std::vector<std::uint64_t>{1, 3, 8, 21});
    CHECK(zeckendorf(1).indices == std::vector<int>{2});
}

TEST_CASE("zeckendorf agrees with a subset search") {
    // Every subset of nonconsecutive indices 2..13, keyed by sum.
    std::map<std::uint64_t, std::vector<std::vector<int>>> by_sum;
    std::vector<int> cur;
    std::function<void(int, std::uint64_t)> walk = [&](int next, std::uint64_t sum) {
        by_sum[sum].push_back(cur);
        for (int i = next; i <= 13; ++i) {
            cur.push_back(i);
            walk(i + 2, sum + fib(i));
            cur.pop_back();
        }
    };
    walk(2, 0);
    for (std::uint64_t n = 0; n <= 200; ++n) {
        REQUIRE(by_sum[n].size() == 1);
        REQUIRE(by_sum[n].front() == zeckendorf(n).indices);
    }
}

TEST_CASE("zeckendorf representation is valid and sums back") {
    for (std::uint64_t n = 0; n <= 20000; n += 7) {
        const auto z = zeckendorf(n);
        REQUIRE(z.is_valid());
        REQUIRE(z.sum() == n);
    }
    const auto big = zeckendorf(~std::uint64_t{0});
    CHECK(big.is_valid());
    CHECK(big.sum() == ~std::uint64_t{0});
}

TEST_CASE("z_k") {
    CHECK(z_k(10, 1) == ExtNat{2});
    CHECK(z_k(10, 2) == ExtNat{8});
    CHECK(z_k(10, 3).is_inf());
    CHECK(z_k(0, 1).is_inf());
    CHECK(z1(0).is_inf());
    CHECK(z1(13) == ExtNat{13});
}

TEST_CASE("nim_sum and smallest_bit") {
    const std::uint64_t a[] = {1, 2, 3};
    const std::uint64_t b[] = {5, 6};
    CHECK(nim_sum(a) == 0);
    CHECK(nim_sum(b) == 3);
    CHECK(nim_sum(std::span<const std::uint64_t>{}) == 0);
    CHECK(smallest_bit(12) == ExtNat{4});
    CHECK(smallest_bit(5) == ExtNat{1});
    CHECK(smallest_bit(0).is_inf());
    CHECK(smallest_bit(std::uint64_t{1} << 63) == ExtNat{std::uint64_t{1} << 63});
}

TEST_CASE("beatty classes: listed members") {
    CHECK(beatty_class(0) == BeattyClass::kB2);
    CHECK(beatty_class(1) == BeattyClass::kAB2);
    CHECK(beatty_class(2) == BeattyClass::kAB1);
    CHECK(beatty_class(4) == BeattyClass::kBB1);
    CHECK(beatty_class(13) == BeattyClass::kB2);
    CHECK(beatty_class(25) == BeattyClass::kBB1);

    const std::map<BeattyClass, std::vector<std::uint64_t>> listed = {
        {BeattyClass::kB2, {0, 3, 5, 8, 11, 13, 16, 18, 21}},
        {BeattyClass::kAB2, {1, 6, 9, 14, 19, 22, 27}},
        {BeattyClass::kAB1, {2, 7, 10, 15, 20, 23, 28}},
        {BeattyClass::kBB1, {4, 12, 17, 25, 33, 38}},
    };
    for (const auto& [cls, members] : listed) {
        std::vector<std::uint64_t> got;
        for (std::uint64_t n = 0; n <= members.back(); ++n) {
            if (beatty_class(n) == cls) {
                got.push_back(n);
            }
        }
        CHECK(got == members);
    }
    CHECK(to_string(BeattyClass::kAB1) == "AB-1");
}

TEST_CASE("beatty floors match long double evaluation") {
    const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
    for (std::uint64_t n = 0; n <= 100000; ++n) {
        REQUIRE(beatty_lower(n) == static_cast<std::uint64_t>(std::floor(phi * n)));
        REQUIRE(beatty_upper(n) == static_cast<std::uint64_t>(std::floor(phi * phi * n)));
    }
}

TEST_CASE("every integer is in exactly one class") {
    for (std::uint64_t n = 0; n <= 5000; ++n) {
        int hits = 0;
        for (auto c : {BeattyClass::kB2, BeattyClass::kAB2, BeattyClass::kAB1, BeattyClass::kBB1}) {
            hits += in_beatty_class(n, c);
        }
        REQUIRE(hits == 1);
    }
}
