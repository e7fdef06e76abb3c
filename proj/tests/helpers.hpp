#pragma once

#include <algorithm>
#include <vector>

#include "qpr/enumerator.hpp"
#include "qpr/network.hpp"
#include "qpr/reliability.hpp"

namespace qpr::test {

// Complete 4-node demo network; source 1, sink 4.
// Arcs: (1,2) (1,3) (1,4) (2,3) (2,4) (3,4),
// M = (5,4,6,4,3,6), L = (4,4,1,4,3,1).
inline Network k4_network() {
    Network net;
    net.node_count = 4;
    net.arcs = {
        {1, 2, 5, 4}, {1, 3, 4, 4}, {1, 4, 6, 1},
        {2, 3, 4, 4}, {2, 4, 3, 3}, {3, 4, 6, 1},
    };
    return validate_network(std::move(net));
}

inline Network single_arc_network(int max_capacity, int lead_time) {
    Network net;
    net.node_count = 2;
    net.arcs = {{1, 2, max_capacity, lead_time}};
    return validate_network(std::move(net));
}

inline std::vector<ArcStateDistribution> uniform_dists(const Network& net) {
    std::vector<ArcStateDistribution> dists;
    for (const Arc& arc : net.arcs) {
        ArcStateDistribution d;
        d.pmf.assign(arc.max_capacity + 1, 1.0 / (arc.max_capacity + 1));
        dists.push_back(std::move(d));
    }
    return dists;
}

// All probability mass on one state per arc: the max capacity or zero.
inline std::vector<ArcStateDistribution> point_dists(const Network& net,
                                                     bool at_max) {
    std::vector<ArcStateDistribution> dists;
    for (const Arc& arc : net.arcs) {
        ArcStateDistribution d;
        d.pmf.assign(arc.max_capacity + 1, 0.0);
        d.pmf[at_max ? arc.max_capacity : 0] = 1.0;
        dists.push_back(std::move(d));
    }
    return dists;
}

// Reference enumeration of simple source-to-sink paths by plain adjacency
// DFS, independent of the node-child matrix machinery.
inline void reference_paths_dfs(const Network& net, int node,
                                std::vector<bool>& visited,
                                std::vector<int>& nodes,
                                std::vector<std::vector<int>>& out) {
    if (node == net.sink()) {
        out.push_back(nodes);
        return;
    }
    for (int next = 1; next <= net.node_count; ++next) {
        if (visited[next]) {
            continue;
        }
        bool adjacent = false;
        for (const Arc& arc : net.arcs) {
            if ((arc.from == node && arc.to == next) ||
                (!net.directed && arc.from == next && arc.to == node)) {
                adjacent = true;
                break;
            }
        }
        if (!adjacent) {
            continue;
        }
        visited[next] = true;
        nodes.push_back(next);
        reference_paths_dfs(net, next, visited, nodes, out);
        nodes.pop_back();
        visited[next] = false;
    }
}

inline std::vector<std::vector<int>> reference_simple_paths(const Network& net) {
    std::vector<std::vector<int>> out;
    std::vector<bool> visited(net.node_count + 1, false);
    std::vector<int> nodes{net.source()};
    visited[net.source()] = true;
    reference_paths_dfs(net, net.source(), visited, nodes, out);
    return out;
}

inline bool dominates(const StateVector& a, const StateVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) {
            return false;
        }
    }
    return true;
}

// Minimal elements under componentwise <= by pairwise comparison.
inline std::vector<StateVector> reference_minimal_elements(
    std::vector<StateVector> vectors) {
    std::sort(vectors.begin(), vectors.end());
    vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
    std::vector<StateVector> minimal;
    for (const StateVector& candidate : vectors) {
        bool dominated = false;
        for (const StateVector& other : vectors) {
            if (other != candidate && dominates(candidate, other)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            minimal.push_back(candidate);
        }
    }
    return minimal;
}

}  // namespace qpr::test
