#include "jamguard/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jamguard/errors.hpp"

namespace jamguard {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fingerprint_hex(std::uint64_t fp) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fp));
    return buf;
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
    std::filesystem::path p = csv_path;
    p.replace_extension(".meta.json");
    return p;
}

} // namespace

ThresholdCurve::ThresholdCurve(std::vector<Knot> knots, double d_max, MarginPolicy policy,
                               std::uint64_t link_fp)
    : knots_(std::move(knots)), d_max_(d_max), policy_(policy), link_fingerprint_(link_fp) {
    std::vector<std::string> issues;
    if (knots_.size() < 2) {
        issues.push_back("threshold curve needs at least 2 knots, got " +
                         std::to_string(knots_.size()));
    }
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (knots_[i].thr < 0.0 || knots_[i].thr > 1.0 || !std::isfinite(knots_[i].thr)) {
            issues.push_back("knot " + std::to_string(i) + ": thr outside [0, 1]");
        }
        if (i > 0 && !(knots_[i].d > knots_[i - 1].d)) {
            issues.push_back("knot " + std::to_string(i) + ": distances not strictly increasing");
        }
        if (i > 0 && knots_[i].thr > knots_[i - 1].thr) {
            issues.push_back("knot " + std::to_string(i) + ": thresholds not non-increasing");
        }
    }
    if (!(d_max_ > 0.0)) {
        issues.push_back("d_max must be positive");
    }
    if (!issues.empty()) {
        throw config_error(std::move(issues));
    }
}

double ThresholdCurve::threshold_at(double d) const {
    const auto& k = knots_;
    if (d <= k.front().d) {
        return k.front().thr;
    }
    if (d >= k.back().d) {
        // Continue the last segment's slope, clamped into [0, 1]. Keeps the
        // threshold defined for every distance, however large.
        const auto& a = k[k.size() - 2];
        const auto& b = k.back();
        const double slope = (b.thr - a.thr) / (b.d - a.d);
        return std::clamp(b.thr + (d - b.d) * slope, 0.0, 1.0);
    }
    auto hi = std::lower_bound(k.begin(), k.end(), d,
                               [](const Knot& kn, double dd) { return kn.d < dd; });
    if (hi->d == d) {
        return hi->thr;
    }
    const auto& b = *hi;
    const auto& a = *(hi - 1);
    const double s = (d - a.d) / (b.d - a.d);
    return a.thr + s * (b.thr - a.thr);
}

std::vector<CalibrationSample> run_sweep(const LinkParams& link, double d_min, double d_max_sweep,
                                         double step, std::uint64_t n_packets,
                                         std::uint64_t seed) {
    if (!(d_min < d_max_sweep) || !(step > 0.0)) {
        throw config_error("calibration sweep grid is degenerate: d_min=" + fmt17(d_min) +
                           " d_max=" + fmt17(d_max_sweep) + " step=" + fmt17(step));
    }
    if (n_packets == 0) {
        throw config_error("calibration sweep needs n_packets >= 1");
    }
    const auto n_points =
        static_cast<std::size_t>(std::floor((d_max_sweep - d_min) / step + 1e-9)) + 1;

    std::vector<CalibrationSample> samples;
    samples.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double d = d_min + static_cast<double>(i) * step;
        RngStream rng(seed, "calibration/" + std::to_string(i));
        std::uint64_t delivered = 0;
        for (std::uint64_t n = 0; n < n_packets; ++n) {
            const PacketAttempt att = transmit_packet(d, {}, link, rng);
            if (att.outcome == Outcome::Delivered) {
                ++delivered;
            }
        }
        samples.push_back({d, static_cast<double>(delivered) / static_cast<double>(n_packets),
                           n_packets});
    }
    return samples;
}

ThresholdCurve build_threshold_curve(std::vector<CalibrationSample> samples, MarginPolicy policy,
                                     double d_max, std::uint64_t link_fp) {
    if (samples.size() < 2) {
        throw config_error("threshold curve needs at least 2 calibration samples, got " +
                           std::to_string(samples.size()));
    }
    std::sort(samples.begin(), samples.end(),
              [](const CalibrationSample& a, const CalibrationSample& b) { return a.d < b.d; });

    std::vector<ThresholdCurve::Knot> knots;
    knots.reserve(samples.size());
    double running_min = 1.0;
    for (const auto& s : samples) {
        const double margin =
            policy.z * std::sqrt(s.pdr_hat * (1.0 - s.pdr_hat) /
                                 static_cast<double>(policy.n_runtime));
        const double raw = std::clamp(s.pdr_hat - margin, 0.0, 1.0);
        // Physical link quality is non-increasing in distance; a noisy sweep
        // is regularized by a running minimum so interpolation cannot bump up.
        running_min = std::min(running_min, raw);
        knots.push_back({s.d, running_min});
    }
    return ThresholdCurve(std::move(knots), d_max, policy, link_fp);
}

std::uint64_t link_fingerprint(const LinkParams& p) {
    std::ostringstream os;
    os << fmt17(p.eps_min) << '|' << fmt17(p.eps_max) << '|' << fmt17(p.d50) << '|'
       << fmt17(p.slope) << '|' << p.shr_bits << '|' << p.payload_bits << '|' << fmt17(p.bitrate)
       << '|' << fmt17(p.d_max);
    return fnv1a64(os.str());
}

void save_curve(const ThresholdCurve& curve, const std::filesystem::path& csv_path) {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) {
        throw std::runtime_error("cannot write curve file: " + csv_path.string());
    }
    csv << "d_m,pdr_thr\n";
    for (const auto& k : curve.knots()) {
        csv << fmt17(k.d) << ',' << fmt17(k.thr) << '\n';
    }
    if (!csv.flush()) {
        throw std::runtime_error("write failed: " + csv_path.string());
    }

    nlohmann::ordered_json meta;
    meta["d_max"] = curve.d_max();
    meta["z"] = curve.policy().z;
    meta["n_runtime"] = curve.policy().n_runtime;
    meta["link_fingerprint"] = fingerprint_hex(curve.link_fingerprint());
    std::ofstream side(sidecar_path(csv_path), std::ios::binary);
    if (!side) {
        throw std::runtime_error("cannot write curve sidecar: " + sidecar_path(csv_path).string());
    }
    side << meta.dump(2) << '\n';
    if (!side.flush()) {
        throw std::runtime_error("write failed: " + sidecar_path(csv_path).string());
    }
}

ThresholdCurve load_curve(const std::filesystem::path& csv_path) {
    std::ifstream csv(csv_path, std::ios::binary);
    if (!csv) {
        throw std::runtime_error("cannot read curve file: " + csv_path.string());
    }
    std::string line;
    if (!std::getline(csv, line) || line != "d_m,pdr_thr") {
        throw config_error(csv_path.string() + ": expected header 'd_m,pdr_thr'");
    }
    std::vector<ThresholdCurve::Knot> knots;
    std::size_t lineno = 1;
    while (std::getline(csv, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw config_error(csv_path.string() + ":" + std::to_string(lineno) +
                               ": expected 'd,thr'");
        }
        try {
            knots.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
        } catch (const std::exception&) {
            throw config_error(csv_path.string() + ":" + std::to_string(lineno) +
                               ": malformed number");
        }
    }

    std::ifstream side(sidecar_path(csv_path), std::ios::binary);
    if (!side) {
        throw std::runtime_error("cannot read curve sidecar: " + sidecar_path(csv_path).string());
    }
    nlohmann::json meta;
    try {
        side >> meta;
    } catch (const std::exception& e) {
        throw config_error(sidecar_path(csv_path).string() + ": " + e.what());
    }
    for (const char* key : {"d_max", "z", "n_runtime", "link_fingerprint"}) {
        if (!meta.contains(key)) {
            throw config_error(sidecar_path(csv_path).string() + ": missing key '" +
                               std::string(key) + "'");
        }
    }
    const MarginPolicy policy{meta["z"].get<double>(), meta["n_runtime"].get<std::uint32_t>()};
    const std::uint64_t fp = std::stoull(meta["link_fingerprint"].get<std::string>(), nullptr, 16);
    return ThresholdCurve(std::move(knots), meta["d_max"].get<double>(), policy, fp);
}

} // namespace jamguard
