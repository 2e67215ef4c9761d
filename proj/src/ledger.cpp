#include "refnet/ledger.hpp"

namespace refnet {

GainLedger& GainLedger::operator+=(const GainLedger& other) {
    for (int hop = 0; hop < kMaxHop; ++hop) {
        for (int c = 0; c < 2; ++c) {
            active[hop][c] += other.active[hop][c];
            passive[hop][c] += other.passive[hop][c];
        }
    }
    skipped_isolated += other.skipped_isolated;
    return *this;
}

std::array<HopShares, kMaxHop> gain_ratios(const GainLedger& ledger) {
    std::array<HopShares, kMaxHop> out;
    for (int hop = 0; hop < kMaxHop; ++hop) {
        if (const auto total = ledger.active_total(hop); total > 0)
            out[hop].active_red_share =
                static_cast<double>(ledger.active[hop][0]) / static_cast<double>(total);
        if (const auto total = ledger.passive_total(hop); total > 0)
            out[hop].passive_red_share =
                static_cast<double>(ledger.passive[hop][0]) / static_cast<double>(total);
    }
    return out;
}

}  // namespace refnet
