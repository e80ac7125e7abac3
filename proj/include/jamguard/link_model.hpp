#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jamguard/rng.hpp"

namespace jamguard {

/// IR-UWB link parameters. Defaults keep packet delivery above 75% out to
/// d_max and degrade smoothly beyond it.
struct LinkParams {
    double eps_min = 1e-5;  // per-bit error probability floor
    double eps_max = 5e-3;  // per-bit error probability ceiling of the distance law
    double d50 = 50.0;      // meters; logistic midpoint of the distance law
    double slope = 5.0;     // meters; logistic scale
    std::uint32_t shr_bits = 64;
    std::uint32_t payload_bits = 1024;
    double bitrate = 6.8e6; // bits/second
    double d_max = 30.0;    // meters; operational maximum

    std::uint32_t total_bits() const { return shr_bits + payload_bits; }
    double airtime() const { return static_cast<double>(total_bits()) / bitrate; }

    bool operator==(const LinkParams&) const = default;
};

enum class Outcome : std::uint8_t { NotSent, LostSync, ReceivedErroneous, Delivered };

const char* to_string(Outcome o);

/// One jammer emission span with the bit-error probability it adds.
struct JamInterval {
    double begin = 0.0; // seconds, absolute
    double end = 0.0;
    double eps = 0.0;

    bool operator==(const JamInterval&) const = default;
};

/// One ranging-packet transmission attempt.
/// Invariants: bit_errors <= bits_total; Delivered implies bit_errors == 0;
/// NotSent implies bit_errors == 0 and bits_total == 0.
struct PacketAttempt {
    double t_start = 0.0;
    std::uint32_t link_index = 0;
    double d = 0.0; // tx-rx distance at t_start, meters
    Outcome outcome = Outcome::NotSent;
    std::uint32_t bit_errors = 0;
    std::uint32_t bits_total = 0;
    double jam_overlap = 0.0; // jammed fraction of airtime, [0, 1]

    bool operator==(const PacketAttempt&) const = default;
};

/// Per-bit error probability of the unjammed channel at distance d.
/// Non-decreasing in d, bounded in [eps_min, eps_max].
double base_bit_error_prob(double d, const LinkParams& p);

/// Closed-form delivery probability under full-airtime jamming of strength
/// eps_jam: (1 - clamp(base + eps_jam, 0, 0.5))^total_bits. Serves as the
/// analytic oracle for the Monte-Carlo path.
double packet_success_prob(double d, double eps_jam, const LinkParams& p);

/// Simulate one packet bit by bit. Bit i occupies
/// [t_start + i/bitrate, t_start + (i+1)/bitrate); a bit overlapping one or
/// more jam intervals has their eps added (summed, then clamped to 0.5).
/// One uniform draw is consumed per bit regardless of parameters, so common
/// random numbers stay aligned across distances and jam patterns.
/// Outcome: any error in the first shr_bits loses sync; otherwise any payload
/// error marks the packet erroneous; otherwise it is delivered.
PacketAttempt transmit_packet(double d, std::span<const JamInterval> jam, const LinkParams& p,
                              RngStream& rng, double t_start = 0.0);

} // namespace jamguard
