#include <doctest.h>

#include <cmath>

#include "jamguard/link_model.hpp"
#include "jamguard/rng.hpp"

using namespace jamguard;

namespace {

// Channel whose per-bit error probability is exactly zero at any sweep
// distance: the logistic term underflows to 0 and eps_min is 0.
LinkParams noiseless() {
    LinkParams p;
    p.eps_min = 0.0;
    p.d50 = 1e9;
    return p;
}

// Independent restatement of the closed form, used as the oracle.
double oracle_success(double d, double eps_jam, const LinkParams& p) {
    const double base = p.eps_min + (p.eps_max - p.eps_min) /
                                        (1.0 + std::exp(-(d - p.d50) / p.slope));
    const double eps = std::min(std::max(base + eps_jam, 0.0), 0.5);
    return std::pow(1.0 - eps, double(p.shr_bits + p.payload_bits));
}

} // namespace

TEST_CASE("base_bit_error_prob evaluates the distance law") {
    const LinkParams p;
    // Saturation towards eps_min at d = 0.
    const double tail = (p.eps_max - p.eps_min) / (1.0 + std::exp(10.0));
    CHECK(std::abs(base_bit_error_prob(0.0, p) - p.eps_min) <= tail + 1e-15);
    CHECK(std::abs(base_bit_error_prob(30.0, p) - 9.9e-5) <= 1e-6);
    CHECK(std::abs(base_bit_error_prob(50.0, p) - 2.505e-3) <= 1e-6);
}

TEST_CASE("base_bit_error_prob is non-decreasing and bounded") {
    const LinkParams p;
    double prev = -1.0;
    for (double d = 0.0; d <= 200.0; d += 0.25) {
        const double eps = base_bit_error_prob(d, p);
        CHECK(eps >= p.eps_min);
        CHECK(eps <= p.eps_max);
        CHECK(eps >= prev);
        prev = eps;
    }
}

TEST_CASE("packet_success_prob matches direct evaluation") {
    const LinkParams p;
    CHECK(std::abs(packet_success_prob(30.0, 0.0, p) - 0.898) <= 0.002);
    CHECK(std::abs(packet_success_prob(20.0, 0.0, p) - 0.976) <= 0.002);
    // Fully jammed channel is a coin flip per bit.
    CHECK(packet_success_prob(12.0, 0.5, p) == doctest::Approx(std::pow(0.5, 1088)));
    CHECK(packet_success_prob(12.0, 0.9, p) == doctest::Approx(std::pow(0.5, 1088)));
    for (double d : {0.0, 10.0, 25.0, 40.0, 80.0}) {
        for (double ej : {0.0, 0.005, 0.02, 0.3}) {
            CHECK(packet_success_prob(d, ej, p) == doctest::Approx(oracle_success(d, ej, p)));
        }
    }
}

TEST_CASE("delivery stays above 75% inside the operational range") {
    const LinkParams p;
    for (double d = 0.5; d <= 30.0 + 1e-9; d += 0.5) {
        CHECK(packet_success_prob(d, 0.0, p) >= 0.75);
    }
}

TEST_CASE("noiseless channel always delivers") {
    const LinkParams p = noiseless();
    RngStream rng(1, "noiseless");
    for (int i = 0; i < 200; ++i) {
        const PacketAttempt att = transmit_packet(10.0, {}, p, rng);
        CHECK(att.outcome == Outcome::Delivered);
        CHECK(att.bit_errors == 0);
        CHECK(att.bits_total == p.total_bits());
        CHECK(att.jam_overlap == 0.0);
    }
}

TEST_CASE("a payload-only jam interval can never lose sync") {
    const LinkParams p = noiseless();
    const double shr_end = double(p.shr_bits) / p.bitrate;
    const JamInterval jam[] = {{shr_end, p.airtime(), 0.5}};
    RngStream rng(2, "payload-jam");
    int erroneous = 0;
    for (int i = 0; i < 300; ++i) {
        const PacketAttempt att = transmit_packet(10.0, jam, p, rng);
        CHECK(att.outcome != Outcome::LostSync);
        CHECK(att.outcome != Outcome::NotSent);
        erroneous += att.outcome == Outcome::ReceivedErroneous;
    }
    CHECK(erroneous == 300); // 1024 fair coin flips without an error would be absurd
}

TEST_CASE("delivered means zero bit errors") {
    const LinkParams p;
    RngStream rng(3, "zero-errors");
    const JamInterval jam[] = {{0.0, p.airtime() * 0.4, 0.01}};
    for (int i = 0; i < 2000; ++i) {
        const PacketAttempt att = transmit_packet(45.0, jam, p, rng);
        CHECK((att.outcome == Outcome::Delivered) == (att.bit_errors == 0));
        CHECK(att.bit_errors <= att.bits_total);
    }
}

TEST_CASE("jam overlap fraction reflects interval coverage") {
    const LinkParams p = noiseless();
    const double at = p.airtime();
    RngStream rng(4, "overlap");
    SUBCASE("full cover") {
        const JamInterval jam[] = {{0.0, at, 0.1}};
        CHECK(transmit_packet(5.0, jam, p, rng).jam_overlap == doctest::Approx(1.0));
    }
    SUBCASE("half cover, overlapping lists counted once") {
        const JamInterval jam[] = {{0.0, at / 2, 0.1}, {at / 4, at / 2, 0.2}};
        CHECK(transmit_packet(5.0, jam, p, rng).jam_overlap == doctest::Approx(0.5));
    }
    SUBCASE("intervals clipped to the airtime") {
        const JamInterval jam[] = {{-1.0, at / 4, 0.1}, {at * 0.75, at + 5.0, 0.1}};
        CHECK(transmit_packet(5.0, jam, p, rng).jam_overlap == doctest::Approx(0.5));
    }
}

TEST_CASE("Monte-Carlo delivery matches the closed form at d = 30") {
    const LinkParams p;
    RngStream rng(5, "mc-30");
    const int n = 100000;
    int delivered = 0;
    for (int i = 0; i < n; ++i) {
        delivered += transmit_packet(30.0, {}, p, rng).outcome == Outcome::Delivered;
    }
    const double ps = packet_success_prob(30.0, 0.0, p);
    const double sigma = std::sqrt(ps * (1.0 - ps) / n);
    CHECK(std::abs(double(delivered) / n - ps) <= 3.0 * sigma);
}

TEST_CASE("under common random numbers more distance never rescues a packet") {
    const LinkParams p;
    RngStream pick(6, "crn-pick");
    for (int trial = 0; trial < 400; ++trial) {
        const double d1 = pick.uniform(0.0, 60.0);
        const double d2 = d1 + pick.uniform(0.1, 30.0);
        const std::string label = "crn/" + std::to_string(trial);
        RngStream r1(99, label);
        RngStream r2(99, label);
        const Outcome near = transmit_packet(d1, {}, p, r1).outcome;
        const Outcome far = transmit_packet(d2, {}, p, r2).outcome;
        if (far == Outcome::Delivered) {
            CHECK(near == Outcome::Delivered);
        }
    }
}
