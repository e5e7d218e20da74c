#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ostp/rng.hpp"

using namespace ostp;

TEST_CASE("fnv1a64 matches the published test vectors") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
    CHECK(fnv1a64("qa") != fnv1a64("sa"));
}

TEST_CASE("seed derivation separates streams") {
    const auto a = derive_seed(1, 2, 3);
    CHECK(a == derive_seed(1, 2, 3));
    CHECK(a != derive_seed(1, 2, 4));
    CHECK(a != derive_seed(1, 3, 2));
    CHECK(a != derive_seed(2, 2, 3));
    CHECK(derive_seed(0, 0) != 0);

    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(42, i));
    CHECK(seen.size() == 1000);
}

TEST_CASE("identical seeds replay identical streams") {
    Rng a(9877);
    Rng b(9877);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("below covers its range without bias artifacts") {
    Rng rng(5);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 70000; ++i) {
        const auto v = rng.below(7);
        REQUIRE(v < 7);
        ++counts[static_cast<std::size_t>(v)];
    }
    for (int c : counts) {
        CHECK(c > 9000);
        CHECK(c < 11000);
    }
    CHECK(rng.below(1) == 0);
}

TEST_CASE("uniform stays in the half-open unit interval") {
    Rng rng(6);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / 100000.0 == doctest::Approx(0.5).epsilon(0.02));

    for (int i = 0; i < 10000; ++i) {
        const double v = rng.uniform(2.0, 3.0);
        REQUIRE(v >= 2.0);
        REQUIRE(v < 3.0);
    }
}

TEST_CASE("open-low sampling excludes the lower bound and includes the upper") {
    Rng rng(7);
    for (int i = 0; i < 100000; ++i) {
        const double v = rng.uniform_open_low(0.0, 1.0);
        REQUIRE(v > 0.0);
        REQUIRE(v <= 1.0);
    }
}

TEST_CASE("shuffle permutes deterministically") {
    std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    Rng a(11);
    a.shuffle(v);
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});

    std::vector<int> w{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    Rng b(11);
    b.shuffle(w);
    CHECK(v == w);
}
