// Test-only oracle: exact expected gain ledgers on tiny graphs, computed by
// summing over every pick/acceptance outcome, independently of the sampling
// code under test.
#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "refnet/attributes.hpp"
#include "refnet/graph.hpp"
#include "refnet/referral.hpp"

namespace refnet_test {

struct ExpectedLedger {
    std::array<std::array<double, 2>, 2> active{};   // [hop][color]
    std::array<std::array<double, 2>, 2> passive{};  // [hop][color]
};

// Pick distribution over u's neighbors for a constrained strategy.
inline std::vector<std::pair<refnet::NodeId, double>> pick_distribution(
    refnet::StrategyKind kind, const refnet::LabeledGraph& g,
    const refnet::NodeAttributes& attrs, refnet::NodeId u) {
    const auto nbrs = g.neighbors(u);
    std::vector<std::pair<refnet::NodeId, double>> out;
    if (kind == refnet::StrategyKind::Random) {
        for (auto v : nbrs) out.emplace_back(v, 1.0 / static_cast<double>(nbrs.size()));
        return out;
    }
    // Uniform over the arg-max tie set (degree or acceptance rate).
    double best = -1.0;
    for (auto v : nbrs) {
        const double score = kind == refnet::StrategyKind::PopularityDriven
                                 ? static_cast<double>(g.degree(v))
                                 : attrs.accept_rate[v];
        if (score > best) best = score;
    }
    std::vector<refnet::NodeId> ties;
    for (auto v : nbrs) {
        const double score = kind == refnet::StrategyKind::PopularityDriven
                                 ? static_cast<double>(g.degree(v))
                                 : attrs.accept_rate[v];
        if (score == best) ties.push_back(v);
    }
    for (auto v : ties) out.emplace_back(v, 1.0 / static_cast<double>(ties.size()));
    return out;
}

inline ExpectedLedger expected_ledger(refnet::StrategyKind kind, const refnet::LabeledGraph& g,
                                      const refnet::NodeAttributes& attrs) {
    using refnet::NodeId;
    using refnet::StrategyKind;
    ExpectedLedger out;
    const auto color = [&](NodeId v) { return static_cast<int>(g.color(v)); };

    if (kind == StrategyKind::Linear) {
        for (NodeId u = 0; u < g.node_count(); ++u) {
            for (NodeId v : g.neighbors(u)) {
                if (!(attrs.share_threshold[u] > attrs.accept_rate[v])) continue;
                out.active[0][color(u)] += 1.0;
                out.passive[0][color(v)] += 1.0;
                for (NodeId w : g.neighbors(v)) {
                    if (w == u) continue;
                    if (attrs.share_threshold[v] > attrs.accept_rate[w]) {
                        out.active[1][color(u)] += 1.0;
                        out.passive[1][color(w)] += 1.0;
                    }
                }
            }
        }
        return out;
    }

    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (g.degree(u) == 0) continue;
        for (const auto& [v, pv] : pick_distribution(kind, g, attrs, u)) {
            const double av = attrs.accept_rate[v];
            if (kind == StrategyKind::AcceptanceDriven) {
                // Acceptance ends the chain at hop 1; rejection forwards to
                // a uniform neighbor of v.
                out.active[0][color(u)] += pv * av;
                out.passive[0][color(v)] += pv * av;
                const double reach2 = pv * (1.0 - av) / static_cast<double>(g.degree(v));
                for (NodeId w : g.neighbors(v)) {
                    out.active[1][color(u)] += reach2 * attrs.accept_rate[w];
                    out.passive[1][color(w)] += reach2 * attrs.accept_rate[w];
                }
            } else {
                out.active[0][color(u)] += pv * av;
                out.passive[0][color(v)] += pv * av;
                for (const auto& [w, pw] : pick_distribution(kind, g, attrs, v)) {
                    const double p2 = pv * av * pw * attrs.accept_rate[w];
                    out.active[1][color(u)] += p2;
                    out.passive[1][color(w)] += p2;
                }
            }
        }
    }
    return out;
}

}  // namespace refnet_test
