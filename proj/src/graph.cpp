#include "refnet/graph.hpp"

#include <stdexcept>

namespace refnet {

NodeId LabeledGraph::add_node(Color c) {
    adj_.emplace_back();
    colors_.push_back(c);
    if (c == Color::Red) ++red_count_;
    return static_cast<NodeId>(adj_.size() - 1);
}

void LabeledGraph::add_edge(NodeId u, NodeId v) {
    if (u == v) throw std::invalid_argument("add_edge: self loop");
    if (!valid_node(u) || !valid_node(v)) throw std::invalid_argument("add_edge: unknown node id");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
}

void LabeledGraph::reserve(std::size_t nodes) {
    adj_.reserve(nodes);
    colors_.reserve(nodes);
}

}  // namespace refnet
