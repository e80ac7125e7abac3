#include <doctest.h>

#include <cmath>

#include "jamguard/rng.hpp"

using namespace jamguard;

TEST_CASE("same (seed, label) replays the same sequence") {
    RngStream a(1234, "link/a->b");
    RngStream b(1234, "link/a->b");
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("different labels give independent streams") {
    RngStream a(1234, "link/a->b");
    RngStream b(1234, "link/a->c");
    RngStream c(1235, "link/a->b");
    int diff_label = 0;
    int diff_seed = 0;
    for (int i = 0; i < 64; ++i) {
        const std::uint64_t v = a.next_u64();
        diff_label += v != b.next_u64();
        diff_seed += v != c.next_u64();
    }
    CHECK(diff_label > 60);
    CHECK(diff_seed > 60);
}

TEST_CASE("uniform01 stays in [0, 1)") {
    RngStream r(7, "u");
    double lo = 1.0;
    double hi = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = r.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo < 0.001);
    CHECK(hi > 0.999);
}

TEST_CASE("exponential draws have the requested mean") {
    RngStream r(11, "exp");
    const double mean = 0.5;
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double x = r.exponential(mean);
        CHECK(x >= 0.0);
        sum += x;
    }
    CHECK(sum / n == doctest::Approx(mean).epsilon(0.02));
}

TEST_CASE("bernoulli edge probabilities") {
    RngStream r(5, "b");
    for (int i = 0; i < 1000; ++i) {
        CHECK_FALSE(r.bernoulli(0.0));
        CHECK(r.bernoulli(1.0));
    }
}

TEST_CASE("stream values are pinned across platforms") {
    // Frozen outputs guard against an engine or mapping change silently
    // breaking reproducibility of recorded traces.
    RngStream r(42, "pin");
    const std::uint64_t v0 = r.next_u64();
    const std::uint64_t v1 = r.next_u64();
    RngStream r2(42, "pin");
    CHECK(v0 == r2.next_u64());
    CHECK(v1 == r2.next_u64());
    CHECK(fnv1a64("pin") == 0x77af761956600b54ull);
    CHECK(mix64(0) == 0xe220a8397b1dcdafull);
    CHECK(mix64(42) == 0xbdd732262feb6e95ull);
}
