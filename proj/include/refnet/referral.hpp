#pragma once

#include <string_view>

#include "refnet/attributes.hpp"
#include "refnet/graph.hpp"
#include "refnet/ledger.hpp"
#include "refnet/rng.hpp"

namespace refnet {

enum class StrategyKind { Random, PopularityDriven, AcceptanceDriven, Linear };

const char* to_string(StrategyKind kind);
StrategyKind parse_strategy(std::string_view name);  // throws on unknown name

// Constrained strategies: every node starts exactly one chain. Isolated
// nodes are skipped and counted on the ledger. Hop-2 picks may return to the
// originator.

// Chain: uniform neighbor v, accepted w.p. a_v; on success v picks a uniform
// neighbor w, accepted w.p. a_w.
GainLedger simulate_random(const LabeledGraph& g, const NodeAttributes& attrs, Rng& rng);

// Same flow, but every pick takes the maximum-degree neighbor; degree ties
// break uniformly at random.
GainLedger simulate_popularity(const LabeledGraph& g, const NodeAttributes& attrs, Rng& rng);

// Picks the neighbor with the highest acceptance rate; on acceptance the
// chain stops at hop 1, on rejection the picked node forwards to a uniform
// neighbor whose acceptance yields the hop-2 gain.
GainLedger simulate_acceptance(const LabeledGraph& g, const NodeAttributes& attrs, Rng& rng);

// Unconstrained: u shares to every neighbor v with t_u > a_v (a share is a
// gain); each recipient repeats toward its own neighbors except the node it
// was reached from, so hop-2 recipients are genuine distance-2 contacts on a
// tree. Deterministic given the attributes.
GainLedger simulate_linear(const LabeledGraph& g, const NodeAttributes& attrs, int hops = 2);

GainLedger simulate(StrategyKind kind, const LabeledGraph& g, const NodeAttributes& attrs,
                    Rng& rng, int linear_hops = 2);

}  // namespace refnet
