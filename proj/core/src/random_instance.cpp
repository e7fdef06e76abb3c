#include "qpr/random_instance.hpp"

#include <numeric>

#include "qpr/rng.hpp"

namespace qpr {

RandomInstance make_random_instance(std::uint64_t seed,
                                    const RandomInstanceOptions& options) {
    std::mt19937_64 gen(seed);

    Network net;
    // Redraw until the arc count fits; the spine keeps every draw connected.
    while (true) {
        net.node_count =
            static_cast<int>(uniform_int(gen, options.min_nodes, options.max_nodes));
        net.arcs.clear();
        for (int node = 1; node < net.node_count; ++node) {
            net.arcs.push_back({node, node + 1, 0, 0});
        }
        for (int u = 1; u <= net.node_count; ++u) {
            for (int v = u + 2; v <= net.node_count; ++v) {
                if (uniform01(gen) < options.extra_arc_probability) {
                    net.arcs.push_back({u, v, 0, 0});
                }
            }
        }
        if (net.arc_count() <= options.max_arcs) {
            break;
        }
    }
    for (Arc& arc : net.arcs) {
        arc.max_capacity = static_cast<int>(uniform_int(gen, 1, options.max_capacity));
        arc.lead_time = static_cast<int>(uniform_int(gen, 0, options.max_lead_time));
    }
    net = validate_network(std::move(net));

    RandomInstance instance;
    instance.network = net;
    instance.seed = seed;
    instance.query.demand = uniform_int(gen, 1, options.max_demand);
    instance.query.time_budget = uniform_int(gen, 1, options.max_time_budget);

    if (options.with_distributions) {
        for (const Arc& arc : net.arcs) {
            std::vector<long long> weights(arc.max_capacity + 1);
            for (auto& w : weights) {
                w = uniform_int(gen, 1, 10);
            }
            const auto total = std::accumulate(weights.begin(), weights.end(), 0LL);
            ArcStateDistribution dist;
            for (auto w : weights) {
                dist.pmf.push_back(static_cast<double>(w) /
                                   static_cast<double>(total));
            }
            instance.distributions.push_back(std::move(dist));
        }
    }
    return instance;
}

}  // namespace qpr
