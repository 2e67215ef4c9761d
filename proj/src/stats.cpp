#include "refnet/stats.hpp"

#include <stdexcept>

namespace refnet {

double rarefaction_index(double minority_ratio, double cross_edge_fraction) {
    if (minority_ratio <= 0.0 || minority_ratio >= 1.0)
        throw std::invalid_argument("rarefaction_index: minority ratio must lie in (0,1)");
    return cross_edge_fraction / (2.0 * minority_ratio * (1.0 - minority_ratio));
}

GroupStats group_stats(const LabeledGraph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("group_stats: graph has no edges");
    const std::size_t n = g.node_count();
    const std::size_t red = g.red_count();
    if (red == 0 || red == n)
        throw std::invalid_argument("group_stats: both colors must be present");

    std::uint64_t cross = 0;
    g.for_each_edge([&](NodeId u, NodeId v) {
        if (g.color(u) != g.color(v)) ++cross;
    });

    GroupStats out;
    out.minority_ratio = static_cast<double>(red) / static_cast<double>(n);
    out.cross_edge_fraction = static_cast<double>(cross) / static_cast<double>(g.edge_count());
    out.rarefaction_index = rarefaction_index(out.minority_ratio, out.cross_edge_fraction);
    return out;
}

ParadoxStats friendship_paradox_stats(const LabeledGraph& g) {
    ParadoxStats out;
    std::array<std::array<double, 2>, 2> sum{};
    g.for_each_edge([&](NodeId u, NodeId v) {
        const int cu = static_cast<int>(g.color(u));
        const int cv = static_cast<int>(g.color(v));
        const auto du = static_cast<double>(g.degree(u));
        const auto dv = static_cast<double>(g.degree(v));
        if (cu == cv) {
            // A uniformly chosen end of a same-color edge.
            sum[cu][cu] += 0.5 * (du + dv);
            out.edge_count[cu][cu] += 1;
        } else {
            sum[cu][cv] += dv;
            out.edge_count[cu][cv] += 1;
            sum[cv][cu] += du;
            out.edge_count[cv][cu] += 1;
        }
    });
    for (int c1 = 0; c1 < 2; ++c1)
        for (int c2 = 0; c2 < 2; ++c2)
            out.edge_end_mean[c1][c2] =
                out.edge_count[c1][c2] ? sum[c1][c2] / static_cast<double>(out.edge_count[c1][c2]) : 0.0;

    std::array<double, 2> deg_sum{};
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const int c = static_cast<int>(g.color(u));
        deg_sum[c] += static_cast<double>(g.degree(u));
        out.node_count[c] += 1;
    }
    for (int c = 0; c < 2; ++c)
        out.node_mean[c] = out.node_count[c] ? deg_sum[c] / static_cast<double>(out.node_count[c]) : 0.0;
    return out;
}

std::vector<TopDegreeRow> top_degree_counts(const LabeledGraph& g,
                                            const std::vector<std::uint64_t>& thresholds) {
    std::vector<TopDegreeRow> rows;
    rows.reserve(thresholds.size());
    for (std::uint64_t k : thresholds) {
        TopDegreeRow row;
        row.min_degree = k;
        for (NodeId u = 0; u < g.node_count(); ++u) {
            if (g.degree(u) >= k) {
                if (g.color(u) == Color::Red)
                    ++row.red;
                else
                    ++row.blue;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace refnet
