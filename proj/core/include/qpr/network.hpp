#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpr/errors.hpp"

namespace qpr {

// One arc of a multi-state flow network. Endpoints are 1-based node ids.
// The current capacity of an arc ranges over {0, 1, ..., max_capacity}.
struct Arc {
    int from = 0;
    int to = 0;
    int max_capacity = 0;  // units of data per time unit
    int lead_time = 0;     // time units for one unit of data to cross the arc

    friend bool operator==(const Arc&, const Arc&) = default;
};

// A multi-state flow network. Node 1 is the source and node `node_count` the
// sink. The arc list order is canonical: every StateVector addresses arcs by
// their position in it.
struct Network {
    int node_count = 0;
    std::vector<Arc> arcs;
    bool directed = false;

    int arc_count() const { return static_cast<int>(arcs.size()); }
    int source() const { return 1; }
    int sink() const { return node_count; }

    friend bool operator==(const Network&, const Network&) = default;
};

// One capacity value per arc, in canonical arc order.
using StateVector = std::vector<int>;

// A transmission request: at least `demand` units of data within
// `time_budget` time units.
struct Query {
    long long demand = 0;
    long long time_budget = 0;

    friend bool operator==(const Query&, const Query&) = default;
};

// Table of traversal children per node, zero meaning an empty slot. Rows are
// node ids 1..n; the width is the maximum (out-)degree over nodes 1..n-1.
// The sink row is all zeros, the source row lists every neighbour of the
// source, and rows of internal nodes list every neighbour except node 1.
class NodeChildMatrix {
public:
    NodeChildMatrix() = default;
    NodeChildMatrix(int node_count, int width)
        : node_count_(node_count),
          width_(width),
          entries_(static_cast<std::size_t>(node_count) * width, 0) {}

    int node_count() const { return node_count_; }
    int width() const { return width_; }

    // Full zero-padded row of node ids for 1-based `node`.
    std::span<const int> children(int node) const {
        return {entries_.data() + static_cast<std::size_t>(node - 1) * width_,
                static_cast<std::size_t>(width_)};
    }

    void set(int node, int slot, int child) {
        entries_[static_cast<std::size_t>(node - 1) * width_ + slot] = child;
    }

    friend bool operator==(const NodeChildMatrix&, const NodeChildMatrix&) = default;

private:
    int node_count_ = 0;
    int width_ = 0;
    std::vector<int> entries_;
};

// Checks every structural invariant and returns the network with undirected
// arc endpoints stored lower id first. Throws ValidationError on a node count
// below 2, an endpoint out of range, a self-loop, a negative capacity or lead
// time, more than one arc on a node pair, or a source/sink without arcs.
Network validate_network(Network net);

// Throws ValidationError unless demand >= 1 and time_budget >= 1.
void validate_query(const Query& query);

// Throws ValidationError unless x has one entry per arc with
// 0 <= x_i <= max_capacity_i.
void check_state_vector(const Network& net, const StateVector& x);

// Builds the node-child matrix of a validated network. Children within a row
// are sorted ascending by node id and padded with zeros.
NodeChildMatrix build_node_child_matrix(const Network& net);

// Index of the arc joining s and t, or nullopt if there is none. Lookup is
// direction-insensitive on undirected networks.
std::optional<int> arc_between(const Network& net, int s, int t);

// "(x1,x2,...,xm)"
std::string format_state_vector(const StateVector& x);

}  // namespace qpr
