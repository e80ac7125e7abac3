#include "jamguard/sim.hpp"

#include <algorithm>

namespace jamguard {

namespace {

struct LinkState {
    std::uint32_t tx_node;
    std::uint32_t rx_node;
    RngStream channel;
    Detector detector;
    WindowStats window;
    bool any_jam_overlap = false;
};

} // namespace

SimTrace run_scenario(const ScenarioConfig& cfg, const ThresholdCurve& curve,
                      std::uint64_t seed) {
    const std::uint64_t n_epochs = cfg.n_epochs();
    const std::uint32_t attempts = cfg.sim.attempts_per_epoch;
    const double epoch_len = cfg.sim.epoch_length;
    const double airtime = cfg.link_params.airtime();

    SimTrace trace;
    trace.attempts.reserve(n_epochs * attempts * cfg.link_indices.size());
    trace.epochs.reserve(n_epochs * cfg.link_indices.size());

    std::vector<LinkState> links;
    links.reserve(cfg.link_indices.size());
    for (std::uint32_t li = 0; li < cfg.link_indices.size(); ++li) {
        const auto [tx, rx] = cfg.link_indices[li];
        const double d0 = distance(position_at(cfg.nodes[tx], 0.0),
                                   position_at(cfg.nodes[rx], 0.0));
        links.push_back(LinkState{
            tx, rx, RngStream(seed, "link/" + cfg.link_name(li)),
            Detector(curve, DetectorParams{cfg.sim.n_min}, d0), WindowStats{}, false});
    }

    std::vector<JammerProcess> jammers;
    jammers.reserve(cfg.jammers.size());
    for (std::size_t ji = 0; ji < cfg.jammers.size(); ++ji) {
        jammers.emplace_back(cfg.jammers[ji], RngStream(seed, "jammer/" + std::to_string(ji)));
    }

    std::vector<JamInterval> jam;
    for (std::uint64_t epoch = 0; epoch < n_epochs; ++epoch) {
        const double epoch_start = static_cast<double>(epoch) * epoch_len;
        for (auto& link : links) {
            link.window = WindowStats{};
            link.window.epoch_index = epoch;
            link.any_jam_overlap = false;
        }
        // Attempts sit at (i + 1/2)/R into the epoch, away from integer-second
        // activation edges; all links share the grid, ties break in link order.
        for (std::uint32_t i = 0; i < attempts; ++i) {
            const double t = epoch_start + (i + 0.5) * epoch_len / attempts;
            for (std::uint32_t li = 0; li < links.size(); ++li) {
                auto& link = links[li];
                const Vec3 tx_pos = position_at(cfg.nodes[link.tx_node], t);
                const Vec3 rx_pos = position_at(cfg.nodes[link.rx_node], t);
                const double d = distance(tx_pos, rx_pos);

                // Clear-channel assessment: only protocol-compliant traffic
                // (the deceptive train) holds the transmitter back. A blocked
                // attempt radiates nothing, so reactive listeners see nothing.
                bool channel_busy = false;
                for (auto& jp : jammers) {
                    if (jp.channel_busy(t)) {
                        channel_busy = true;
                        break;
                    }
                }

                PacketAttempt att;
                if (channel_busy) {
                    att.t_start = t;
                    att.d = d;
                    att.outcome = Outcome::NotSent;
                } else {
                    jam.clear();
                    for (auto& jp : jammers) {
                        const double d_tx = distance(position_at(jp.spec().node, t), tx_pos);
                        auto spans = jp.jam_intervals(
                            t, airtime, /*tx_visible=*/true, d_tx, [&](double tm) {
                                return distance(position_at(jp.spec().node, tm),
                                                position_at(cfg.nodes[link.rx_node], tm));
                            });
                        jam.insert(jam.end(), spans.begin(), spans.end());
                    }
                    att = transmit_packet(d, jam, cfg.link_params, link.channel, t);
                }
                att.link_index = li;
                record(link.window, att, epoch_len);
                link.any_jam_overlap = link.any_jam_overlap || att.jam_overlap > 0.0;
                trace.attempts.push_back(att);
            }
        }

        const double t_mid = epoch_start + 0.5 * epoch_len;
        const bool any_window_overlap = std::any_of(
            cfg.jammers.begin(), cfg.jammers.end(), [&](const JammerSpec& s) {
                return s.active_window.t_on < epoch_start + epoch_len &&
                       s.active_window.t_off > epoch_start;
            });
        for (std::uint32_t li = 0; li < links.size(); ++li) {
            auto& link = links[li];
            const double d_mid = distance(position_at(cfg.nodes[link.tx_node], t_mid),
                                          position_at(cfg.nodes[link.rx_node], t_mid));
            const bool truth = any_window_overlap && link.any_jam_overlap;
            EpochRecord rec;
            rec.link_index = li;
            rec.t_start = epoch_start;
            rec.stats = link.window;
            rec.verdict = link.detector.step(link.window, d_mid, truth);
            trace.epochs.push_back(rec);
        }
        for (auto& jp : jammers) {
            jp.prune_before(epoch_start);
        }
    }

    for (std::size_t ji = 0; ji < jammers.size(); ++ji) {
        trace.jammers.push_back({cfg.jammers[ji].node.id, cfg.jammers[ji].kind,
                                 jammers[ji].emitted_on_time(cfg.sim.duration)});
    }
    return trace;
}

} // namespace jamguard
