#pragma once

#include <cstdint>
#include <optional>

#include "jamguard/link_model.hpp"

namespace jamguard {

/// Tumbling per-epoch counters for one link, plus the four derived link
/// statistics. A ratio with a zero denominator is "no value", never 0 or 1,
/// so downstream code can tell "no data" from "bad link".
struct WindowStats {
    std::uint64_t epoch_index = 0;
    std::uint64_t intended = 0;
    std::uint64_t sent = 0;
    std::uint64_t received_any = 0; // erroneous + delivered
    std::uint64_t erroneous = 0;
    std::uint64_t delivered = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t bits_transferred = 0;

    bool operator==(const WindowStats&) const = default;
};

/// Fold one attempt into its epoch window. Every attempt counts as intended;
/// NotSent contributes nothing else; LostSync packets still contribute their
/// bit counters. Throws std::logic_error if the attempt's start time falls
/// outside the window's epoch.
void record(WindowStats& w, const PacketAttempt& attempt, double epoch_length);

/// Packet delivery ratio: delivered / sent.
std::optional<double> pdr(const WindowStats& w);

/// Bit error ratio: bit_errors / bits_transferred.
std::optional<double> ber(const WindowStats& w);

/// Bad packet ratio: erroneous / received_any.
std::optional<double> bpr(const WindowStats& w);

/// Packet send ratio: sent / intended.
std::optional<double> psr(const WindowStats& w);

/// Counter-wise sum; epoch_index taken from a. Ratios of the merge equal
/// ratios computed from the summed counters by construction.
WindowStats merge(const WindowStats& a, const WindowStats& b);

} // namespace jamguard
