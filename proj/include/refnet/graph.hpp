#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace refnet {

using NodeId = std::uint32_t;

// Red is the minority group throughout.
enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline const char* to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

// Undirected two-colored simple graph. Built once (single-threaded) via
// add_node/add_edge, then treated as immutable: all const queries are safe
// to call concurrently. Callers are responsible for not inserting self
// loops or duplicate edges; the loader and the generator both guarantee it.
class LabeledGraph {
public:
    LabeledGraph() = default;

    NodeId add_node(Color c);
    void add_edge(NodeId u, NodeId v);

    void reserve(std::size_t nodes);

    std::size_t node_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t red_count() const { return red_count_; }

    Color color(NodeId u) const { return colors_[u]; }
    std::size_t degree(NodeId u) const { return adj_[u].size(); }
    std::span<const NodeId> neighbors(NodeId u) const { return adj_[u]; }
    bool valid_node(NodeId u) const { return u < adj_.size(); }

    // Visits each undirected edge once, as (u, v) with u < v.
    template <typename Fn>
    void for_each_edge(Fn&& fn) const {
        for (NodeId u = 0; u < adj_.size(); ++u)
            for (NodeId v : adj_[u])
                if (u < v) fn(u, v);
    }

private:
    std::vector<std::vector<NodeId>> adj_;
    std::vector<Color> colors_;
    std::size_t edge_count_ = 0;
    std::size_t red_count_ = 0;
};

}  // namespace refnet
