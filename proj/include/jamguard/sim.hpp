#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jamguard/calibration.hpp"
#include "jamguard/detector.hpp"
#include "jamguard/jammer.hpp"
#include "jamguard/ranging_stats.hpp"
#include "jamguard/scenario.hpp"

namespace jamguard {

/// One finalized epoch of one link: the counters, the verdict, and the epoch
/// start time.
struct EpochRecord {
    std::uint32_t link_index = 0;
    double t_start = 0.0;
    WindowStats stats;
    VerdictRecord verdict;

    bool operator==(const EpochRecord&) const = default;
};

struct JammerActivity {
    std::string node_id;
    JammerKind kind = JammerKind::Constant;
    double emitted_on_s = 0.0;
};

struct SimTrace {
    std::vector<PacketAttempt> attempts; // ordered by (time, link index)
    std::vector<EpochRecord> epochs;     // ordered by (epoch, link index)
    std::vector<JammerActivity> jammers;
};

/// Run one scenario: per epoch and per link, attempts_per_epoch ranging
/// attempts at uniform spacing, each passed through jammer scheduling, CCA
/// and the bit-level channel; per-epoch counters feed one detector per link.
/// Pure function of (config, curve, seed): every substream is derived from
/// the seed and a fixed label, so repeated runs produce identical traces.
SimTrace run_scenario(const ScenarioConfig& cfg, const ThresholdCurve& curve, std::uint64_t seed);

} // namespace jamguard
