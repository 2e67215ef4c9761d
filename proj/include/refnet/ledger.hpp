#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "refnet/graph.hpp"

namespace refnet {

constexpr int kMaxHop = 2;

// Per-hop, per-color success counts. active[k][c]: successful hop-(k+1)
// referrals credited to the chain's originator of color c. passive[k][c]:
// acceptances credited to the hop-(k+1) recipient of color c. Every success
// has exactly one originator and one recipient, so per-hop active and
// passive totals always agree.
struct GainLedger {
    std::array<std::array<std::uint64_t, 2>, kMaxHop> active{};
    std::array<std::array<std::uint64_t, 2>, kMaxHop> passive{};
    std::uint64_t skipped_isolated = 0;

    void credit(int hop, Color originator, Color recipient) {
        active[hop][static_cast<int>(originator)] += 1;
        passive[hop][static_cast<int>(recipient)] += 1;
    }

    std::uint64_t active_total(int hop) const { return active[hop][0] + active[hop][1]; }
    std::uint64_t passive_total(int hop) const { return passive[hop][0] + passive[hop][1]; }

    GainLedger& operator+=(const GainLedger& other);
};

// Red share of gains at one hop; empty when the hop recorded nothing.
struct HopShares {
    std::optional<double> active_red_share;
    std::optional<double> passive_red_share;
};

std::array<HopShares, kMaxHop> gain_ratios(const GainLedger& ledger);

}  // namespace refnet
