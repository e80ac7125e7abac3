#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <vector>

#include "jamguard/link_model.hpp"
#include "jamguard/node.hpp"
#include "jamguard/rng.hpp"

namespace jamguard {

enum class JammerKind : std::uint8_t { Constant, Deceptive, Random, Reactive };

const char* to_string(JammerKind k);

struct TimeWindow {
    double t_on = 0.0;
    double t_off = std::numeric_limits<double>::infinity();

    bool contains(double t) const { return t >= t_on && t < t_off; }
    bool operator==(const TimeWindow&) const = default;
};

/// One interferer. Only the parameters of its kind matter; the rest keep
/// their defaults.
struct JammerSpec {
    JammerKind kind = JammerKind::Constant;
    NodeSpec node;
    double eps_jmax = 0.02; // added per-bit error probability at zero distance
    double j50 = 25.0;      // meters; half-effect distance
    double j_slope = 5.0;   // meters
    double on_mean = 0.5;   // Random: mean ON duration, seconds
    double off_mean = 0.5;  // Random: mean OFF duration, seconds
    double pkt_rate = 5000.0;    // Deceptive: packets/second
    double pkt_airtime = 1.6e-4; // Deceptive: seconds per packet
    double sense_prob = 0.8;     // Reactive
    double sense_range = 20.0;   // Reactive: meters, around the transmitter
    double reaction_delay = 1.2e-5; // Reactive: seconds
    TimeWindow active_window;

    bool operator==(const JammerSpec&) const = default;
};

/// Added bit-error probability at jammer-to-receiver distance d_j.
/// eps_jmax * logistic((j50 - d_j)/j_slope); non-increasing in d_j.
double jam_effect(double d_j, const JammerSpec& spec);

/// Stateful emission schedule of one jammer. Random and Deceptive kinds carry
/// a lazily extended realization drawn from the jammer's own stream, shared
/// between jam_intervals and channel_busy; queries must not move backwards
/// past a prune_before() horizon.
class JammerProcess {
public:
    JammerProcess(JammerSpec spec, RngStream rng);

    /// Emission spans intersecting the packet airtime [t_start, t_start+airtime),
    /// clipped to it and to the active window, non-overlapping, each carrying
    /// eps = jam_effect at its midpoint. tx_visible marks a transmission that
    /// actually radiated (a CCA-suppressed attempt is invisible to a reactive
    /// listener). d_to_tx is the jammer-to-transmitter distance at t_start;
    /// d_to_rx_at evaluates the jammer-to-receiver distance at a given time.
    std::vector<JamInterval> jam_intervals(double t_start, double airtime, bool tx_visible,
                                           double d_to_tx,
                                           const std::function<double(double)>& d_to_rx_at);

    /// Deceptive only: true iff a packet of the jammer's own train covers t.
    /// Other kinds never occupy the channel in a protocol-compliant way.
    bool channel_busy(double t);

    /// Drop realized spans that end before t. Queries before t become invalid.
    void prune_before(double t);

    /// Extend the Random/Deceptive realization to cover time t.
    void realize_until(double t);

    /// Total emission seconds generated so far, clipped to the active window.
    /// For Constant pass the horizon explicitly.
    double emitted_on_time(double until);

    const JammerSpec& spec() const { return spec_; }

private:
    struct Span {
        double begin;
        double end;
    };

    void append_on_span(double begin, double end);

    JammerSpec spec_;
    RngStream rng_;
    std::deque<Span> spans_;     // Random: ON spans; Deceptive: merged busy spans
    double realized_until_;      // realization horizon (Random/Deceptive)
    double next_on_begin_;       // Random: start of the next ON span
    double next_arrival_;        // Deceptive: next train packet start
    double emitted_total_ = 0.0; // window-clipped emission seconds (not pruned away)
};

} // namespace jamguard
