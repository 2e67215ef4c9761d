#pragma once

#include <cstdint>

#include "refnet/graph.hpp"

namespace refnet {

struct KhopCounts {
    std::uint64_t total = 0;
    std::uint64_t red = 0;
    std::uint64_t blue = 0;
};

// Counts nodes at shortest-path distance exactly k from a source, via a
// level-limited BFS. Holds reusable workspace, so queries are O(visited)
// with no per-call allocation; use one counter per thread.
class KhopCounter {
public:
    explicit KhopCounter(const LabeledGraph& g);

    KhopCounts count(NodeId source, int k);

private:
    const LabeledGraph& g_;
    std::vector<std::uint32_t> mark_;
    std::vector<NodeId> frontier_;
    std::vector<NodeId> next_;
    std::uint32_t stamp_ = 0;
};

// One-shot convenience wrapper.
KhopCounts khop_count(const LabeledGraph& g, NodeId source, int k);

// Sum of per-node k-hop counts, split by the color of the source node:
// (sum over red sources, sum over blue sources).
struct KhopDegreeSums {
    double red = 0;
    double blue = 0;
    double red_share() const { return red / (red + blue); }
};
KhopDegreeSums khop_degree_sums(const LabeledGraph& g, int k, int threads = 1);

}  // namespace refnet
