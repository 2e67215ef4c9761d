#pragma once

#include <cstdint>
#include <vector>

#include "refnet/graph.hpp"
#include "refnet/rng.hpp"

namespace refnet {

struct BpaParams {
    double r = 0.2;          // minority arrival probability, in (0, 0.5)
    double rho = 0.5;        // cross-color acceptance probability, in (0, 1]
    std::uint32_t n = 1000;  // target node count, >= 2
    std::uint64_t seed = 1;

    void validate() const;
};

struct BpaResult {
    LabeledGraph graph;
    // alpha[t-1] is the red share of total degree after time step t, i.e. on
    // the graph with t edges and t+1 nodes; entries lie in [0, 1].
    std::vector<double> alpha;

    double final_alpha() const { return alpha.back(); }
};

// Grows a network by biased preferential attachment: starts from one red
// node joined to one blue node; each step adds one node (red w.p. r) and one
// edge whose existing endpoint is drawn degree-proportionally, redrawing
// cross-color picks that fail the rho acceptance coin until an edge forms.
// The arriving node is not in its own target pool. The result is always a
// tree on n nodes, identical for identical params.
BpaResult generate_bpa(const BpaParams& params);

// Degree-proportional node sampling from a static graph, backed by the edge
// endpoint list (each edge contributes both ends). One instance per thread.
class DegreeSampler {
public:
    explicit DegreeSampler(const LabeledGraph& g);
    NodeId sample(Rng& rng) const;

private:
    std::vector<NodeId> endpoints_;
};

// One-shot convenience: node u with probability degree(u) / (2 * edges).
NodeId sample_degree_proportional(const LabeledGraph& g, Rng& rng);

}  // namespace refnet
