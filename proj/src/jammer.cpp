#include "jamguard/jammer.hpp"

#include <algorithm>
#include <cmath>

namespace jamguard {

namespace {

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

} // namespace

const char* to_string(JammerKind k) {
    switch (k) {
    case JammerKind::Constant:  return "constant";
    case JammerKind::Deceptive: return "deceptive";
    case JammerKind::Random:    return "random";
    case JammerKind::Reactive:  return "reactive";
    }
    return "?";
}

double jam_effect(double d_j, const JammerSpec& spec) {
    return spec.eps_jmax * logistic((spec.j50 - d_j) / spec.j_slope);
}

JammerProcess::JammerProcess(JammerSpec spec, RngStream rng)
    : spec_(std::move(spec)), rng_(std::move(rng)), realized_until_(spec_.active_window.t_on),
      next_on_begin_(spec_.active_window.t_on), next_arrival_(spec_.active_window.t_on) {
    if (spec_.kind == JammerKind::Deceptive) {
        next_arrival_ = spec_.active_window.t_on +
                        (spec_.pkt_rate > 0.0 ? rng_.exponential(1.0 / spec_.pkt_rate)
                                              : std::numeric_limits<double>::infinity());
    }
}

void JammerProcess::append_on_span(double begin, double end) {
    const auto& w = spec_.active_window;
    const double b = std::max(begin, w.t_on);
    const double e = std::min(end, w.t_off);
    if (e <= b) {
        return;
    }
    // Emission seconds are counted per generated span; a deceptive train that
    // overlaps itself counts each packet's airtime in full.
    emitted_total_ += e - b;
    if (!spans_.empty() && spans_.back().end >= b) {
        spans_.back().end = std::max(spans_.back().end, e);
    } else {
        spans_.push_back({b, e});
    }
}

void JammerProcess::realize_until(double t) {
    const auto& w = spec_.active_window;
    const double horizon = std::min(t, w.t_off);

    if (spec_.kind == JammerKind::Random) {
        // Alternating ON/OFF renewal process, starting ON at activation.
        while (realized_until_ < horizon) {
            const double on = rng_.exponential(spec_.on_mean);
            const double off = rng_.exponential(spec_.off_mean);
            append_on_span(next_on_begin_, next_on_begin_ + on);
            next_on_begin_ += on + off;
            realized_until_ = next_on_begin_;
        }
    } else if (spec_.kind == JammerKind::Deceptive) {
        // Poisson packet train; packets may overlap, busy spans are the union.
        while (next_arrival_ < horizon) {
            append_on_span(next_arrival_, next_arrival_ + spec_.pkt_airtime);
            next_arrival_ += spec_.pkt_rate > 0.0 ? rng_.exponential(1.0 / spec_.pkt_rate)
                                                  : std::numeric_limits<double>::infinity();
        }
        realized_until_ = std::max(realized_until_, horizon);
    }
}

void JammerProcess::prune_before(double t) {
    while (!spans_.empty() && spans_.front().end <= t) {
        spans_.pop_front();
    }
}

bool JammerProcess::channel_busy(double t) {
    if (spec_.kind != JammerKind::Deceptive || !spec_.active_window.contains(t)) {
        return false;
    }
    realize_until(t + spec_.pkt_airtime);
    auto it = std::partition_point(spans_.begin(), spans_.end(),
                                   [t](const Span& s) { return s.end <= t; });
    return it != spans_.end() && it->begin <= t;
}

std::vector<JamInterval> JammerProcess::jam_intervals(
    double t_start, double airtime, bool tx_visible, double d_to_tx,
    const std::function<double(double)>& d_to_rx_at) {
    std::vector<JamInterval> out;
    const auto& w = spec_.active_window;
    const double t_end = t_start + airtime;
    if (airtime <= 0.0 || t_end <= w.t_on || t_start >= w.t_off) {
        return out;
    }

    auto emit = [&](double b, double e) {
        b = std::max({b, t_start, w.t_on});
        e = std::min({e, t_end, w.t_off});
        if (e > b) {
            const double mid = 0.5 * (b + e);
            out.push_back({b, e, jam_effect(d_to_rx_at(mid), spec_)});
        }
    };

    switch (spec_.kind) {
    case JammerKind::Constant:
        emit(w.t_on, w.t_off);
        break;
    case JammerKind::Random:
    case JammerKind::Deceptive: {
        realize_until(t_end);
        auto it = std::partition_point(spans_.begin(), spans_.end(),
                                       [t_start](const Span& s) { return s.end <= t_start; });
        for (; it != spans_.end() && it->begin < t_end; ++it) {
            emit(it->begin, it->end);
        }
        break;
    }
    case JammerKind::Reactive:
        // Listens for transmissions; only an in-range, actually radiated start
        // triggers a reaction. The stream is consumed only on such events.
        if (tx_visible && w.contains(t_start) && d_to_tx <= spec_.sense_range &&
            rng_.bernoulli(spec_.sense_prob)) {
            const double b = t_start + spec_.reaction_delay;
            const double e = std::min(t_end, w.t_off);
            if (e > b) {
                emitted_total_ += e - b;
                out.push_back({b, e, jam_effect(d_to_rx_at(0.5 * (b + e)), spec_)});
            }
        }
        break;
    }
    return out;
}

double JammerProcess::emitted_on_time(double until) {
    switch (spec_.kind) {
    case JammerKind::Constant: {
        const auto& w = spec_.active_window;
        return std::max(0.0, std::min(until, w.t_off) - w.t_on);
    }
    case JammerKind::Random:
    case JammerKind::Deceptive:
        realize_until(until);
        return emitted_total_;
    case JammerKind::Reactive:
        return emitted_total_;
    }
    return 0.0;
}

} // namespace jamguard
