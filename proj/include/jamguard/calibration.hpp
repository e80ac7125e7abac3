#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "jamguard/link_model.hpp"

namespace jamguard {

/// One attack-free sweep measurement.
struct CalibrationSample {
    double d = 0.0;       // meters
    double pdr_hat = 0.0; // measured delivery ratio, [0, 1]
    std::uint64_t n_packets = 0;

    bool operator==(const CalibrationSample&) const = default;
};

/// How far below the calibrated delivery ratio the threshold sits. The margin
/// is sized for the runtime estimator (n_runtime packets per decision), not
/// for the calibration sample size: the quantity compared at decision time is
/// a small-sample ratio, and a margin-free curve would fire on estimator
/// noise alone.
struct MarginPolicy {
    double z = 4.0;
    std::uint32_t n_runtime = 50;

    bool operator==(const MarginPolicy&) const = default;
};

/// The distance-indexed delivery-ratio threshold. Total on [0, inf):
/// clamped below the first knot, piecewise-linear between knots, extended
/// along the last segment's slope above the last knot (clamped to [0, 1]).
/// Knot thresholds are non-increasing in distance, so the whole function is.
class ThresholdCurve {
public:
    struct Knot {
        double d = 0.0;
        double thr = 0.0;

        bool operator==(const Knot&) const = default;
    };

    ThresholdCurve(std::vector<Knot> knots, double d_max, MarginPolicy policy,
                   std::uint64_t link_fingerprint);

    double threshold_at(double d) const;

    double d_max() const { return d_max_; }
    const std::vector<Knot>& knots() const { return knots_; }
    const MarginPolicy& policy() const { return policy_; }
    std::uint64_t link_fingerprint() const { return link_fingerprint_; }

    bool operator==(const ThresholdCurve&) const = default;

private:
    std::vector<Knot> knots_;
    double d_max_;
    MarginPolicy policy_;
    std::uint64_t link_fingerprint_;
};

/// Attack-free measurement sweep over the distance grid
/// {d_min, d_min+step, ...} up to and including d_max_sweep. Each grid point
/// sends n_packets through the bit-level channel with no jamming and records
/// the delivered fraction. Deterministic given the seed. Throws config_error
/// on a degenerate grid.
std::vector<CalibrationSample> run_sweep(const LinkParams& link, double d_min, double d_max_sweep,
                                         double step, std::uint64_t n_packets, std::uint64_t seed);

/// Threshold per knot: pdr_hat - z*sqrt(pdr_hat*(1-pdr_hat)/n_runtime),
/// clamped to [0, 1], then regularized to be non-increasing in d (running
/// minimum from small d upward). Samples are sorted by d first; duplicates
/// or fewer than two samples are a config_error.
ThresholdCurve build_threshold_curve(std::vector<CalibrationSample> samples, MarginPolicy policy,
                                     double d_max, std::uint64_t link_fingerprint = 0);

/// Fingerprint of the channel parameters a curve was calibrated against.
std::uint64_t link_fingerprint(const LinkParams& p);

/// CSV with header `d_m,pdr_thr`, one knot per row, doubles printed with
/// enough digits to round-trip bit-exactly. A JSON sidecar (same path with
/// .csv replaced by .meta.json) holds d_max, z, n_runtime and the link
/// fingerprint.
void save_curve(const ThresholdCurve& curve, const std::filesystem::path& csv_path);
ThresholdCurve load_curve(const std::filesystem::path& csv_path);

} // namespace jamguard
