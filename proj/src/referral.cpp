#include "refnet/referral.hpp"

#include <stdexcept>
#include <string>

namespace refnet {

namespace {

NodeId uniform_neighbor(const LabeledGraph& g, NodeId u, Rng& rng) {
    const auto nbrs = g.neighbors(u);
    return nbrs[rng.uniform_below(nbrs.size())];
}

// Single pass with reservoir tie-breaking, so ties are uniform without
// materializing the tie set.
NodeId max_degree_neighbor(const LabeledGraph& g, NodeId u, Rng& rng) {
    NodeId best = 0;
    std::size_t best_degree = 0;
    std::uint64_t ties = 0;
    for (NodeId v : g.neighbors(u)) {
        const std::size_t d = g.degree(v);
        if (d > best_degree) {
            best_degree = d;
            best = v;
            ties = 1;
        } else if (d == best_degree) {
            ++ties;
            if (rng.uniform_below(ties) == 0) best = v;
        }
    }
    return best;
}

NodeId max_acceptance_neighbor(const LabeledGraph& g, const NodeAttributes& attrs, NodeId u,
                               Rng& rng) {
    NodeId best = 0;
    double best_rate = -1.0;
    std::uint64_t ties = 0;
    for (NodeId v : g.neighbors(u)) {
        const double a = attrs.accept_rate[v];
        if (a > best_rate) {
            best_rate = a;
            best = v;
            ties = 1;
        } else if (a == best_rate) {
            ++ties;
            if (rng.uniform_below(ties) == 0) best = v;
        }
    }
    return best;
}

template <typename PickFn>
GainLedger run_two_hop_chains(const LabeledGraph& g, const NodeAttributes& attrs, Rng& rng,
                              PickFn&& pick) {
    GainLedger ledger;
    const NodeId n = static_cast<NodeId>(g.node_count());
    for (NodeId u = 0; u < n; ++u) {
        if (g.degree(u) == 0) {
            ++ledger.skipped_isolated;
            continue;
        }
        const NodeId v = pick(u);
        if (!rng.bernoulli(attrs.accept_rate[v])) continue;
        ledger.credit(0, g.color(u), g.color(v));
        const NodeId w = pick(v);
        if (rng.bernoulli(attrs.accept_rate[w])) ledger.credit(1, g.color(u), g.color(w));
    }
    return ledger;
}

}  // namespace

const char* to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Random: return "random";
        case StrategyKind::PopularityDriven: return "popularity";
        case StrategyKind::AcceptanceDriven: return "acceptance";
        case StrategyKind::Linear: return "linear";
    }
    return "?";
}

StrategyKind parse_strategy(std::string_view name) {
    if (name == "random") return StrategyKind::Random;
    if (name == "popularity") return StrategyKind::PopularityDriven;
    if (name == "acceptance") return StrategyKind::AcceptanceDriven;
    if (name == "linear") return StrategyKind::Linear;
    throw std::invalid_argument("unknown strategy: " + std::string(name));
}

GainLedger simulate_random(const LabeledGraph& g, const NodeAttributes& attrs, Rng& rng) {
    return run_two_hop_chains(g, attrs, rng,
                              [&](NodeId u) { return uniform_neighbor(g, u, rng); });
}

GainLedger simulate_popularity(const LabeledGraph& g, const NodeAttributes& attrs, Rng& rng) {
    return run_two_hop_chains(g, attrs, rng,
                              [&](NodeId u) { return max_degree_neighbor(g, u, rng); });
}

GainLedger simulate_acceptance(const LabeledGraph& g, const NodeAttributes& attrs, Rng& rng) {
    GainLedger ledger;
    const NodeId n = static_cast<NodeId>(g.node_count());
    for (NodeId u = 0; u < n; ++u) {
        if (g.degree(u) == 0) {
            ++ledger.skipped_isolated;
            continue;
        }
        const NodeId v = max_acceptance_neighbor(g, attrs, u, rng);
        if (rng.bernoulli(attrs.accept_rate[v])) {
            ledger.credit(0, g.color(u), g.color(v));
            continue;  // accepted referrals stop at the first hop
        }
        const NodeId w = uniform_neighbor(g, v, rng);
        if (rng.bernoulli(attrs.accept_rate[w])) ledger.credit(1, g.color(u), g.color(w));
    }
    return ledger;
}

GainLedger simulate_linear(const LabeledGraph& g, const NodeAttributes& attrs, int hops) {
    if (hops < 1 || hops > kMaxHop)
        throw std::invalid_argument("simulate_linear: hops must be 1 or 2");
    GainLedger ledger;
    const NodeId n = static_cast<NodeId>(g.node_count());
    for (NodeId u = 0; u < n; ++u) {
        const double tu = attrs.share_threshold[u];
        for (NodeId v : g.neighbors(u)) {
            if (!(tu > attrs.accept_rate[v])) continue;
            ledger.credit(0, g.color(u), g.color(v));
            if (hops < 2) continue;
            const double tv = attrs.share_threshold[v];
            for (NodeId w : g.neighbors(v)) {
                if (w == u) continue;  // no immediate bounce-back
                if (tv > attrs.accept_rate[w]) ledger.credit(1, g.color(u), g.color(w));
            }
        }
    }
    return ledger;
}

GainLedger simulate(StrategyKind kind, const LabeledGraph& g, const NodeAttributes& attrs,
                    Rng& rng, int linear_hops) {
    switch (kind) {
        case StrategyKind::Random: return simulate_random(g, attrs, rng);
        case StrategyKind::PopularityDriven: return simulate_popularity(g, attrs, rng);
        case StrategyKind::AcceptanceDriven: return simulate_acceptance(g, attrs, rng);
        case StrategyKind::Linear: return simulate_linear(g, attrs, linear_hops);
    }
    throw std::logic_error("simulate: bad strategy");
}

}  // namespace refnet
