#include "jamguard/detector.hpp"

namespace jamguard {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Jamming:      return "Jamming";
    case Verdict::NoJamming:    return "NoJamming";
    case Verdict::Insufficient: return "Insufficient";
    }
    return "?";
}

Verdict decide(double pdr, double d, const ThresholdCurve& curve) {
    if (d < curve.d_max() && pdr < curve.threshold_at(d)) {
        return Verdict::Jamming;
    }
    return Verdict::NoJamming;
}

Detector::Detector(ThresholdCurve curve, DetectorParams params, double initial_d)
    : curve_(std::move(curve)), params_(params), last_good_d_(initial_d) {}

void Detector::set_jamming_callback(std::function<void(const VerdictRecord&)> cb) {
    on_jamming_ = std::move(cb);
}

VerdictRecord Detector::step(const WindowStats& w, double true_d, bool truth) {
    VerdictRecord rec;
    rec.epoch_index = w.epoch_index;
    rec.truth = truth;
    rec.n_samples = w.sent;

    if (w.delivered >= 1) {
        last_good_d_ = true_d;
        rec.d_used = true_d;
        rec.d_stale = false;
    } else {
        rec.d_used = last_good_d_;
        rec.d_stale = true;
    }
    rec.thr = curve_.threshold_at(rec.d_used);

    rec.pdr_used = pdr(w);
    if (!rec.pdr_used.has_value() || w.sent < params_.n_min) {
        rec.verdict = Verdict::Insufficient;
        return rec;
    }
    rec.verdict = decide(*rec.pdr_used, rec.d_used, curve_);
    if (rec.verdict == Verdict::Jamming && on_jamming_) {
        on_jamming_(rec);
    }
    return rec;
}

} // namespace jamguard
