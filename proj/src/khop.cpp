#include "refnet/khop.hpp"

#include <stdexcept>
#include <utility>

#include "refnet/parallel.hpp"

namespace refnet {

KhopCounter::KhopCounter(const LabeledGraph& g) : g_(g), mark_(g.node_count(), 0) {}

KhopCounts KhopCounter::count(NodeId source, int k) {
    if (!g_.valid_node(source)) throw std::invalid_argument("khop_count: invalid node id");
    if (k < 1) throw std::invalid_argument("khop_count: k must be >= 1");

    ++stamp_;
    mark_[source] = stamp_;
    frontier_.clear();
    frontier_.push_back(source);

    for (int level = 0; level < k; ++level) {
        next_.clear();
        for (NodeId u : frontier_) {
            for (NodeId v : g_.neighbors(u)) {
                if (mark_[v] != stamp_) {
                    mark_[v] = stamp_;
                    next_.push_back(v);
                }
            }
        }
        std::swap(frontier_, next_);
        if (frontier_.empty()) break;
    }

    KhopCounts out;
    out.total = frontier_.size();
    for (NodeId v : frontier_) {
        if (g_.color(v) == Color::Red) ++out.red;
    }
    out.blue = out.total - out.red;
    return out;
}

KhopCounts khop_count(const LabeledGraph& g, NodeId source, int k) {
    KhopCounter counter(g);
    return counter.count(source, k);
}

KhopDegreeSums khop_degree_sums(const LabeledGraph& g, int k, int threads) {
    const std::size_t n = g.node_count();
    KhopDegreeSums out;
    parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end, std::size_t,
                                    std::mutex& merge_mutex) {
        KhopCounter counter(g);
        double red = 0, blue = 0;
        for (std::size_t u = begin; u < end; ++u) {
            const auto c = counter.count(static_cast<NodeId>(u), k);
            if (g.color(static_cast<NodeId>(u)) == Color::Red)
                red += static_cast<double>(c.total);
            else
                blue += static_cast<double>(c.total);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        out.red += red;
        out.blue += blue;
    });
    return out;
}

}  // namespace refnet
