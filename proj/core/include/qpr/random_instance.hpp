#pragma once

#include <cstdint>

#include "qpr/network.hpp"
#include "qpr/reliability.hpp"

namespace qpr {

// Controls for the random verification instances. Defaults keep the
// brute-force oracle cheap: small connected networks with a forced
// 1-2-...-n spine and each remaining pair added with probability 1/2.
struct RandomInstanceOptions {
    int min_nodes = 3;
    int max_nodes = 6;
    int max_arcs = 9;                 // instances above this are redrawn
    double extra_arc_probability = 0.5;
    int max_capacity = 4;             // M_i uniform in 1..max_capacity
    int max_lead_time = 5;            // l_i uniform in 0..max_lead_time
    long long max_demand = 6;         // d uniform in 1..max_demand
    long long max_time_budget = 12;   // T uniform in 1..max_time_budget
    bool with_distributions = true;
};

struct RandomInstance {
    Network network;
    std::vector<ArcStateDistribution> distributions;  // empty when disabled
    Query query;
    std::uint64_t seed = 0;
};

// Deterministic instance for the given seed. Distributions are integer
// weights normalized to a pmf, so they are valid by construction.
RandomInstance make_random_instance(std::uint64_t seed,
                                    const RandomInstanceOptions& options = {});

}  // namespace qpr
