#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace jamguard {

/// Deterministic labeled random stream. Equal (seed, label) pairs replay the
/// exact same draw sequence on every platform: mt19937_64 is fully pinned by
/// the standard, and all value mappings below avoid std::*_distribution,
/// whose output is implementation-defined.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::string_view label);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Exponential with the given mean; mean <= 0 yields 0.
    double exponential(double mean);

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

std::uint64_t fnv1a64(std::string_view s);

/// splitmix64 finalizer; bijective on u64.
std::uint64_t mix64(std::uint64_t x);

} // namespace jamguard
