#include <doctest.h>

#include <cmath>
#include <map>

#include "jamguard/harness.hpp"
#include "jamguard/sim.hpp"

using namespace jamguard;
using nlohmann::json;

namespace {

json base_config(double duration = 10.0) {
    json j = json::parse(R"({
      "nodes": [
        {"id": "tx", "role": "ranging-node", "waypoints": [{"t": 0, "pos": [0, 0, 0]}]},
        {"id": "rx", "role": "ranging-node", "waypoints": [{"t": 0, "pos": [20, 0, 0]}]},
        {"id": "j1", "role": "jammer-host", "waypoints": [{"t": 0, "pos": [0, 5, 0]}]}
      ],
      "links": [["tx", "rx"]],
      "sim": {"duration": 10},
      "detector": {"sweep": {"d_min": 5, "d_max": 30, "step": 2.5, "n_packets": 400, "seed": 9}},
      "seed": 1
    })");
    j["sim"]["duration"] = duration;
    return j;
}

ThresholdCurve curve_for(const ScenarioConfig& cfg) { return resolve_curve(cfg, 9); }

} // namespace

TEST_CASE("attempt and verdict counts follow the schedule") {
    const auto cfg = parse_scenario(base_config());
    const auto trace = run_scenario(cfg, curve_for(cfg), 1);
    CHECK(trace.attempts.size() == 500); // 10 epochs x 50 attempts x 1 link
    CHECK(trace.epochs.size() == 10);
    std::map<std::uint64_t, int> per_epoch;
    for (const auto& a : trace.attempts) {
        per_epoch[std::uint64_t(a.t_start)] += 1;
    }
    for (const auto& [epoch, n] : per_epoch) {
        CHECK(n == 50);
    }
}

TEST_CASE("identical config and seed replay identical traces") {
    const auto cfg = parse_scenario(base_config());
    const auto curve = curve_for(cfg);
    const auto a = run_scenario(cfg, curve, 33);
    const auto b = run_scenario(cfg, curve, 33);
    REQUIRE(a.attempts.size() == b.attempts.size());
    CHECK(a.attempts == b.attempts);
    CHECK(a.epochs == b.epochs);
}

TEST_CASE("different seeds explore different outcomes within the same law") {
    const auto cfg = parse_scenario(base_config(20.0));
    const auto curve = curve_for(cfg);
    const auto a = run_scenario(cfg, curve, 1);
    const auto b = run_scenario(cfg, curve, 2);
    CHECK(a.attempts != b.attempts);

    const double ps = packet_success_prob(20.0, 0.0, cfg.link_params);
    const double n = double(a.attempts.size());
    const double band = 3.0 * std::sqrt(n * ps * (1.0 - ps));
    for (const auto* trace : {&a, &b}) {
        double delivered = 0;
        for (const auto& att : trace->attempts) {
            delivered += att.outcome == Outcome::Delivered;
        }
        CHECK(std::abs(delivered - n * ps) <= band);
    }
}

TEST_CASE("attempts stay on schedule under deceptive jamming") {
    json j = base_config();
    j["jammers"] = json::array({{{"kind", "deceptive"}, {"node", "j1"}}});
    const auto cfg = parse_scenario(j);
    const auto trace = run_scenario(cfg, curve_for(cfg), 5);
    CHECK(trace.attempts.size() == 500); // NotSent still yields a record
    int suppressed = 0;
    for (const auto& a : trace.attempts) {
        if (a.outcome == Outcome::NotSent) {
            ++suppressed;
            CHECK(a.bits_total == 0);
            CHECK(a.bit_errors == 0);
            CHECK(a.jam_overlap == 0.0);
        }
    }
    // Busy fraction around 1 - e^(-0.8); far from zero or one.
    CHECK(suppressed > 200);
    CHECK(suppressed < 350);
    // Send ratio drops below 1 in active epochs.
    int degraded = 0;
    for (const auto& e : trace.epochs) {
        degraded += psr(e.stats).value_or(1.0) < 1.0;
    }
    CHECK(degraded == 10);
}

TEST_CASE("send ratio is perfect without a deceptive jammer") {
    json j = base_config();
    j["jammers"] = json::array({{{"kind", "constant"}, {"node", "j1"}}});
    const auto cfg = parse_scenario(j);
    const auto trace = run_scenario(cfg, curve_for(cfg), 6);
    for (const auto& e : trace.epochs) {
        CHECK(psr(e.stats) == 1.0);
        CHECK(e.stats.sent == 50);
    }
}

TEST_CASE("truth marks exactly the epochs with jammed traffic") {
    json j = base_config();
    j["jammers"] =
        json::array({{{"kind", "constant"}, {"node", "j1"}, {"active_window", {3.0, 7.0}}}});
    const auto cfg = parse_scenario(j);
    const auto trace = run_scenario(cfg, curve_for(cfg), 7);
    for (const auto& e : trace.epochs) {
        const bool in_window = e.verdict.epoch_index >= 3 && e.verdict.epoch_index <= 6;
        CHECK(e.verdict.truth == in_window);
    }
}

TEST_CASE("reactive jamming corrupts payloads while constant jamming kills sync") {
    // Same seed: the channel substream is independent of the jammer substream,
    // so the baseline draws are common to all three runs.
    json j_base = base_config();
    json j_react = base_config();
    j_react["jammers"] = json::array({{{"kind", "reactive"}, {"node", "j1"}}});
    json j_const = base_config();
    j_const["jammers"] = json::array({{{"kind", "constant"}, {"node", "j1"}}});

    const auto cfg_base = parse_scenario(j_base);
    const auto curve = curve_for(cfg_base);
    const auto base = run_scenario(cfg_base, curve, 11);
    const auto react = run_scenario(parse_scenario(j_react), curve, 11);
    const auto cons = run_scenario(parse_scenario(j_const), curve, 11);

    WindowStats wb;
    WindowStats wr;
    WindowStats wc;
    for (const auto& e : base.epochs) {
        wb = merge(wb, e.stats);
    }
    for (const auto& e : react.epochs) {
        wr = merge(wr, e.stats);
    }
    for (const auto& e : cons.epochs) {
        wc = merge(wc, e.stats);
    }

    // Reactive (delay > sync header): deliveries drop, erroneous receptions
    // rise, sync losses stay at the baseline level.
    CHECK(wr.delivered < wb.delivered);
    CHECK(wr.erroneous > wb.erroneous);
    CHECK(wr.received_any == wr.erroneous + wr.delivered);

    // A close constant jammer hits the header too: both deliveries and
    // receptions collapse.
    CHECK(wc.delivered < wb.delivered / 4);
    CHECK(wc.received_any < wb.received_any / 2);
}

TEST_CASE("the constant jammer's epoch verdicts catch the attack") {
    json j = base_config();
    j["nodes"][1]["waypoints"][0]["pos"] = {10, 0, 0}; // 10 m link
    j["jammers"] =
        json::array({{{"kind", "constant"}, {"node", "j1"}, {"active_window", {5.0, 10.0}}}});
    const auto cfg = parse_scenario(j);
    const auto trace = run_scenario(cfg, curve_for(cfg), 13);
    for (const auto& e : trace.epochs) {
        if (e.verdict.epoch_index >= 5) {
            CHECK(e.verdict.verdict == Verdict::Jamming);
        } else {
            CHECK(e.verdict.verdict == Verdict::NoJamming);
        }
    }
}

TEST_CASE("attempts are ordered by time") {
    json j = base_config();
    j["nodes"].push_back(json::parse(
        R"({"id": "rx2", "role": "ranging-node", "waypoints": [{"t": 0, "pos": [0, 15, 0]}]})"));
    j["links"].push_back({"tx", "rx2"});
    const auto cfg = parse_scenario(j);
    const auto trace = run_scenario(cfg, curve_for(cfg), 17);
    CHECK(trace.attempts.size() == 1000);
    for (std::size_t i = 1; i < trace.attempts.size(); ++i) {
        CHECK(trace.attempts[i].t_start >= trace.attempts[i - 1].t_start);
    }
    CHECK(trace.epochs.size() == 20);
}

TEST_CASE("jammer emission totals land in the trace") {
    json j = base_config();
    j["jammers"] =
        json::array({{{"kind", "constant"}, {"node", "j1"}, {"active_window", {2.0, 8.0}}}});
    const auto cfg = parse_scenario(j);
    const auto trace = run_scenario(cfg, curve_for(cfg), 19);
    REQUIRE(trace.jammers.size() == 1);
    CHECK(trace.jammers[0].node_id == "j1");
    CHECK(trace.jammers[0].kind == JammerKind::Constant);
    CHECK(trace.jammers[0].emitted_on_s == 6.0);
}
