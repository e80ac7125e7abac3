#include "jamguard/ranging_stats.hpp"

#include <stdexcept>
#include <string>

namespace jamguard {

namespace {

std::optional<double> ratio(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        return std::nullopt;
    }
    return static_cast<double>(num) / static_cast<double>(den);
}

} // namespace

void record(WindowStats& w, const PacketAttempt& attempt, double epoch_length) {
    const auto epoch = static_cast<std::uint64_t>(attempt.t_start / epoch_length);
    if (epoch != w.epoch_index) {
        throw std::logic_error("attempt at t=" + std::to_string(attempt.t_start) +
                               " belongs to epoch " + std::to_string(epoch) + ", window is epoch " +
                               std::to_string(w.epoch_index));
    }
    ++w.intended;
    if (attempt.outcome == Outcome::NotSent) {
        return;
    }
    ++w.sent;
    w.bit_errors += attempt.bit_errors;
    w.bits_transferred += attempt.bits_total;
    switch (attempt.outcome) {
    case Outcome::Delivered:
        ++w.received_any;
        ++w.delivered;
        break;
    case Outcome::ReceivedErroneous:
        ++w.received_any;
        ++w.erroneous;
        break;
    case Outcome::LostSync:
    case Outcome::NotSent:
        break;
    }
}

std::optional<double> pdr(const WindowStats& w) { return ratio(w.delivered, w.sent); }
std::optional<double> ber(const WindowStats& w) { return ratio(w.bit_errors, w.bits_transferred); }
std::optional<double> bpr(const WindowStats& w) { return ratio(w.erroneous, w.received_any); }
std::optional<double> psr(const WindowStats& w) { return ratio(w.sent, w.intended); }

WindowStats merge(const WindowStats& a, const WindowStats& b) {
    WindowStats m = a;
    m.intended += b.intended;
    m.sent += b.sent;
    m.received_any += b.received_any;
    m.erroneous += b.erroneous;
    m.delivered += b.delivered;
    m.bit_errors += b.bit_errors;
    m.bits_transferred += b.bits_transferred;
    return m;
}

} // namespace jamguard
