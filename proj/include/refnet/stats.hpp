#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "refnet/graph.hpp"

namespace refnet {

struct GroupStats {
    double minority_ratio = 0;       // red node fraction
    double cross_edge_fraction = 0;  // edges with differently colored endpoints
    double rarefaction_index = 0;    // cross fraction over its no-homophily expectation
};

// cross / (2 r (1 - r)); the denominator is the expected cross fraction when
// colors are assigned independently of structure.
double rarefaction_index(double minority_ratio, double cross_edge_fraction);

// Throws std::invalid_argument on an edgeless or single-color graph.
GroupStats group_stats(const LabeledGraph& g);

// Mean degrees behind the friendship-paradox check: for each ordered color
// pair (c1, c2), the mean degree of the c2 endpoint over edges joining c1 and
// c2 (same-color edges average both ends), against the mean degree of a
// uniform c2 node.
struct ParadoxStats {
    std::array<std::array<double, 2>, 2> edge_end_mean{};   // [c1][c2]
    std::array<std::array<std::uint64_t, 2>, 2> edge_count{};
    std::array<double, 2> node_mean{};
    std::array<std::uint64_t, 2> node_count{};
};
ParadoxStats friendship_paradox_stats(const LabeledGraph& g);

// Glass-ceiling diagnostic: counts of nodes with degree >= threshold, by
// color. Reported as-is; no limit is asserted anywhere.
struct TopDegreeRow {
    std::uint64_t min_degree = 0;
    std::uint64_t red = 0;
    std::uint64_t blue = 0;
};
std::vector<TopDegreeRow> top_degree_counts(const LabeledGraph& g,
                                            const std::vector<std::uint64_t>& thresholds);

}  // namespace refnet
