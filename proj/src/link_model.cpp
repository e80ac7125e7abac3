#include "jamguard/link_model.hpp"

#include <algorithm>
#include <cmath>

namespace jamguard {

namespace {

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double clamp_eps(double eps) { return std::clamp(eps, 0.0, 0.5); }

// Length of the union of [begin,end) intervals clipped to [lo, hi).
double union_coverage(std::span<const JamInterval> jam, double lo, double hi) {
    std::vector<std::pair<double, double>> spans;
    spans.reserve(jam.size());
    for (const auto& j : jam) {
        const double b = std::max(j.begin, lo);
        const double e = std::min(j.end, hi);
        if (e > b) {
            spans.emplace_back(b, e);
        }
    }
    std::sort(spans.begin(), spans.end());
    double covered = 0.0;
    double cursor = lo;
    for (const auto& [b, e] : spans) {
        const double from = std::max(b, cursor);
        if (e > from) {
            covered += e - from;
            cursor = e;
        }
    }
    return covered;
}

} // namespace

const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::NotSent:           return "NotSent";
    case Outcome::LostSync:          return "LostSync";
    case Outcome::ReceivedErroneous: return "ReceivedErroneous";
    case Outcome::Delivered:         return "Delivered";
    }
    return "?";
}

double base_bit_error_prob(double d, const LinkParams& p) {
    return p.eps_min + (p.eps_max - p.eps_min) * logistic((d - p.d50) / p.slope);
}

double packet_success_prob(double d, double eps_jam, const LinkParams& p) {
    const double eps = clamp_eps(base_bit_error_prob(d, p) + eps_jam);
    return std::pow(1.0 - eps, static_cast<double>(p.total_bits()));
}

PacketAttempt transmit_packet(double d, std::span<const JamInterval> jam, const LinkParams& p,
                              RngStream& rng, double t_start) {
    const std::uint32_t n_bits = p.total_bits();
    const double bit_time = 1.0 / p.bitrate;
    const double t_end = t_start + n_bits * bit_time;
    const double base = base_bit_error_prob(d, p);

    // Jam intervals sorted by start; lists from distinct jammers may overlap,
    // their eps contributions add per bit.
    std::vector<JamInterval> sorted(jam.begin(), jam.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const JamInterval& a, const JamInterval& b) { return a.begin < b.begin; });

    PacketAttempt att;
    att.t_start = t_start;
    att.d = d;
    att.bits_total = n_bits;

    std::uint32_t shr_errors = 0;
    std::uint32_t payload_errors = 0;
    std::size_t lead = 0; // first interval that may still overlap the current bit
    for (std::uint32_t i = 0; i < n_bits; ++i) {
        const double bit_begin = t_start + i * bit_time;
        const double bit_end = bit_begin + bit_time;
        while (lead < sorted.size() && sorted[lead].end <= bit_begin) {
            ++lead;
        }
        double eps_extra = 0.0;
        for (std::size_t k = lead; k < sorted.size() && sorted[k].begin < bit_end; ++k) {
            if (sorted[k].end > bit_begin) {
                eps_extra += sorted[k].eps;
            }
        }
        const double eps = clamp_eps(base + eps_extra);
        // Every bit consumes exactly one draw.
        if (rng.uniform01() < eps) {
            if (i < p.shr_bits) {
                ++shr_errors;
            } else {
                ++payload_errors;
            }
        }
    }

    att.bit_errors = shr_errors + payload_errors;
    if (shr_errors > 0) {
        att.outcome = Outcome::LostSync;
    } else if (payload_errors > 0) {
        att.outcome = Outcome::ReceivedErroneous;
    } else {
        att.outcome = Outcome::Delivered;
    }
    const double airtime = t_end - t_start;
    att.jam_overlap = airtime > 0.0 ? union_coverage(sorted, t_start, t_end) / airtime : 0.0;
    return att;
}

} // namespace jamguard
