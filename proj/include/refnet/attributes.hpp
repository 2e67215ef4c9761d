#pragma once

#include <cstdint>
#include <vector>

#include "refnet/graph.hpp"
#include "refnet/rng.hpp"

namespace refnet {

// Per-node acceptance rate and sharing threshold, both i.i.d. Uniform(0,1).
struct NodeAttributes {
    std::vector<double> accept_rate;      // a_u
    std::vector<double> share_threshold;  // t_u
};

NodeAttributes sample_attributes(const LabeledGraph& g, std::uint64_t seed);
NodeAttributes sample_attributes(const LabeledGraph& g, Rng& rng);

}  // namespace refnet
