#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "jamguard/calibration.hpp"
#include "jamguard/ranging_stats.hpp"

namespace jamguard {

enum class Verdict : std::uint8_t { Jamming, NoJamming, Insufficient };

const char* to_string(Verdict v);

/// Per-epoch detection output with the inputs that produced it.
struct VerdictRecord {
    std::uint64_t epoch_index = 0;
    double d_used = 0.0;  // distance fed to the threshold lookup
    bool d_stale = false; // d_used is a carry-over from an earlier epoch
    std::optional<double> pdr_used;
    double thr = 0.0;
    Verdict verdict = Verdict::NoJamming;
    bool truth = false; // a jammer actually overlapped traffic this epoch
    std::uint64_t n_samples = 0;

    bool operator==(const VerdictRecord&) const = default;
};

/// The binary decision rule. Jamming iff d < d_max AND pdr < thr(d), with
/// strict inequalities: equality in either comparison is NoJamming, and any
/// distance at or beyond the operational maximum is NoJamming no matter how
/// low the measured ratio is (too far apart, weak signal is the plausible
/// cause).
Verdict decide(double pdr, double d, const ThresholdCurve& curve);

struct DetectorParams {
    std::uint32_t n_min = 20; // sent packets needed for a binary verdict
};

/// Per-link decision engine. Applies decide() once per epoch; an epoch whose
/// delivery ratio is undefined or based on fewer than n_min sent packets
/// yields Insufficient instead of a binary verdict.
///
/// The distance fed to the lookup is the epoch's true geometric distance when
/// at least one ranging exchange succeeded in the epoch; otherwise the last
/// known good distance is reused and flagged stale (jamming can destroy the
/// very measurement the rule needs, so the engine stays total).
class Detector {
public:
    Detector(ThresholdCurve curve, DetectorParams params, double initial_d);

    VerdictRecord step(const WindowStats& w, double true_d, bool truth);

    /// Hook invoked on every Jamming verdict; ships as a no-op.
    void set_jamming_callback(std::function<void(const VerdictRecord&)> cb);

    const ThresholdCurve& curve() const { return curve_; }

private:
    ThresholdCurve curve_;
    DetectorParams params_;
    double last_good_d_;
    std::function<void(const VerdictRecord&)> on_jamming_;
};

} // namespace jamguard
