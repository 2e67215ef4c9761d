#include "refnet/bpa.hpp"

#include <stdexcept>

namespace refnet {

void BpaParams::validate() const {
    if (!(r > 0.0 && r < 0.5))
        throw std::invalid_argument("BpaParams: r must lie in (0, 0.5)");
    if (!(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument("BpaParams: rho must lie in (0, 1]; rho = 0 cannot terminate");
    if (n < 2) throw std::invalid_argument("BpaParams: n must be >= 2");
}

BpaResult generate_bpa(const BpaParams& params) {
    params.validate();
    constexpr std::uint64_t kResampleCap = 1'000'000'000ULL;

    Rng rng(params.seed);
    BpaResult out;
    out.graph.reserve(params.n);
    out.alpha.reserve(params.n - 1);

    // Endpoint list: position 2e and 2e+1 hold the two ends of edge e.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * (params.n - 1));

    const NodeId first = out.graph.add_node(Color::Red);
    const NodeId second = out.graph.add_node(Color::Blue);
    out.graph.add_edge(first, second);
    endpoints.push_back(first);
    endpoints.push_back(second);
    std::uint64_t red_degree = 1;
    out.alpha.push_back(0.5);

    for (std::uint32_t t = 2; t < params.n; ++t) {
        const Color c = rng.bernoulli(params.r) ? Color::Red : Color::Blue;
        NodeId target = 0;
        std::uint64_t attempts = 0;
        for (;;) {
            if (++attempts > kResampleCap)
                throw std::runtime_error("generate_bpa: resample cap hit; rho too close to 0");
            target = endpoints[rng.uniform_below(endpoints.size())];
            if (out.graph.color(target) == c || rng.bernoulli(params.rho)) break;
        }
        const NodeId u = out.graph.add_node(c);
        out.graph.add_edge(u, target);
        endpoints.push_back(u);
        endpoints.push_back(target);
        if (c == Color::Red) ++red_degree;
        if (out.graph.color(target) == Color::Red) ++red_degree;
        out.alpha.push_back(static_cast<double>(red_degree) /
                            static_cast<double>(2 * out.graph.edge_count()));
    }
    return out;
}

DegreeSampler::DegreeSampler(const LabeledGraph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("DegreeSampler: graph has no edges");
    endpoints_.reserve(2 * g.edge_count());
    g.for_each_edge([&](NodeId u, NodeId v) {
        endpoints_.push_back(u);
        endpoints_.push_back(v);
    });
}

NodeId DegreeSampler::sample(Rng& rng) const {
    return endpoints_[rng.uniform_below(endpoints_.size())];
}

NodeId sample_degree_proportional(const LabeledGraph& g, Rng& rng) {
    return DegreeSampler(g).sample(rng);
}

}  // namespace refnet
