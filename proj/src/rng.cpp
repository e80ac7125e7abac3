#include "jamguard/rng.hpp"

#include <cmath>

namespace jamguard {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::string_view label)
    : engine_(mix64(mix64(seed) ^ fnv1a64(label))) {}

double RngStream::exponential(double mean) {
    if (mean <= 0.0) {
        return 0.0;
    }
    // uniform01() < 1, so the argument stays in (0, 1].
    return -mean * std::log(1.0 - uniform01());
}

} // namespace jamguard
