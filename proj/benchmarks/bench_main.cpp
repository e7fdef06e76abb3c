#include <benchmark/benchmark.h>

#include <algorithm>

#include "qpr/enumerator.hpp"
#include "qpr/oracle.hpp"
#include "qpr/random_instance.hpp"
#include "qpr/reliability.hpp"
#include "qpr/rng.hpp"

namespace {

using namespace qpr;

Network demo_network() {
    Network net;
    net.node_count = 4;
    net.arcs = {
        {1, 2, 5, 4}, {1, 3, 4, 4}, {1, 4, 6, 1},
        {2, 3, 4, 4}, {2, 4, 3, 3}, {3, 4, 6, 1},
    };
    return validate_network(std::move(net));
}

// Layered network with `layers` fully connected ranks of `width` nodes
// between the source and the sink; the path count grows as width^layers.
Network layered_network(int layers, int width) {
    Network net;
    net.node_count = 2 + layers * width;
    std::vector<std::vector<int>> ranks(layers);
    int next = 2;  // the sink keeps the highest id
    for (int l = 0; l < layers; ++l) {
        for (int w = 0; w < width; ++w) {
            ranks[l].push_back(next++);
        }
    }
    for (int node : ranks[0]) {
        net.arcs.push_back({1, node, 4, 1});
    }
    for (int l = 0; l + 1 < layers; ++l) {
        for (int a : ranks[l]) {
            for (int b : ranks[l + 1]) {
                net.arcs.push_back({a, b, 4, 1});
            }
        }
    }
    for (int node : ranks[layers - 1]) {
        net.arcs.push_back({node, net.node_count, 4, 1});
    }
    net.directed = true;  // keep the traversal layer to layer
    return validate_network(std::move(net));
}

void BM_BuildNodeChildMatrix(benchmark::State& state) {
    const Network net = layered_network(4, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_node_child_matrix(net));
    }
}
BENCHMARK(BM_BuildNodeChildMatrix);

void BM_FindMinimalVectorsDemo(benchmark::State& state) {
    const Network net = demo_network();
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_minimal_vectors(net, {4, 7}));
    }
}
BENCHMARK(BM_FindMinimalVectorsDemo);

void BM_FindMinimalVectorsLayered(benchmark::State& state) {
    const Network net = layered_network(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_minimal_vectors(net, {6, 10}));
    }
}
BENCHMARK(BM_FindMinimalVectorsLayered)->Arg(3)->Arg(4)->Arg(5);

void BM_EnumerateAllMps(benchmark::State& state) {
    const Network net = layered_network(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_all_mps(net));
    }
}
BENCHMARK(BM_EnumerateAllMps)->Arg(3)->Arg(4)->Arg(5);

void BM_UnionProbability(benchmark::State& state) {
    const int sigma = static_cast<int>(state.range(0));
    RandomInstanceOptions options;
    options.min_nodes = 6;
    options.max_nodes = 6;
    const auto instance = make_random_instance(7, options);
    const Network& net = instance.network;

    // Synthetic pairwise-distinct vectors below the capacities.
    std::mt19937_64 gen(11);
    std::vector<StateVector> vectors;
    while (static_cast<int>(vectors.size()) < sigma) {
        StateVector v(net.arc_count());
        for (int i = 0; i < net.arc_count(); ++i) {
            v[i] = static_cast<int>(uniform_int(gen, 0, net.arcs[i].max_capacity));
        }
        if (std::find(vectors.begin(), vectors.end(), v) == vectors.end()) {
            vectors.push_back(std::move(v));
        }
    }

    for (auto _ : state) {
        benchmark::DoNotOptimize(
            union_probability(net, instance.distributions, vectors, sigma));
    }
    state.SetComplexityN(sigma);
}
BENCHMARK(BM_UnionProbability)->Arg(5)->Arg(10)->Arg(15)->Arg(20);

void BM_BruteForceThetaMin(benchmark::State& state) {
    const auto instance = make_random_instance(derive_seed(3, state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            brute_force_theta_min(instance.network, instance.query));
    }
}
BENCHMARK(BM_BruteForceThetaMin)->Arg(0)->Arg(1)->Arg(2);

void BM_MonteCarlo(benchmark::State& state) {
    const Network net = demo_network();
    std::vector<ArcStateDistribution> dists;
    for (const Arc& arc : net.arcs) {
        ArcStateDistribution d;
        d.pmf.assign(arc.max_capacity + 1, 1.0 / (arc.max_capacity + 1));
        dists.push_back(std::move(d));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            monte_carlo_reliability(net, dists, {4, 7}, state.range(0), 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
