#include "refnet/attributes.hpp"

namespace refnet {

NodeAttributes sample_attributes(const LabeledGraph& g, Rng& rng) {
    NodeAttributes attrs;
    const std::size_t n = g.node_count();
    attrs.accept_rate.resize(n);
    attrs.share_threshold.resize(n);
    for (std::size_t u = 0; u < n; ++u) attrs.accept_rate[u] = rng.uniform01();
    for (std::size_t u = 0; u < n; ++u) attrs.share_threshold[u] = rng.uniform01();
    return attrs;
}

NodeAttributes sample_attributes(const LabeledGraph& g, std::uint64_t seed) {
    Rng rng(seed);
    return sample_attributes(g, rng);
}

}  // namespace refnet
