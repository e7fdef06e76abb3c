#include "qpr/network.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace qpr {

namespace {

std::string arc_label(int index) {
    return "arc " + std::to_string(index + 1);
}

}  // namespace

Network validate_network(Network net) {
    if (net.node_count < 2) {
        throw ValidationError("network needs at least 2 nodes, got " +
                              std::to_string(net.node_count));
    }
    if (net.arcs.empty()) {
        throw ValidationError("network has no arcs");
    }

    std::set<std::pair<int, int>> seen;
    bool touches_source = false;
    bool touches_sink = false;
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        Arc& arc = net.arcs[i];
        if (arc.from < 1 || arc.from > net.node_count || arc.to < 1 ||
            arc.to > net.node_count) {
            throw ValidationError(arc_label(i) + ": endpoint out of range 1.." +
                                  std::to_string(net.node_count) + " (" +
                                  std::to_string(arc.from) + "," +
                                  std::to_string(arc.to) + ")");
        }
        if (arc.from == arc.to) {
            throw ValidationError(arc_label(i) + ": self-loop on node " +
                                  std::to_string(arc.from));
        }
        if (arc.max_capacity < 0) {
            throw ValidationError(arc_label(i) + ": negative max_capacity");
        }
        if (arc.lead_time < 0) {
            throw ValidationError(arc_label(i) + ": negative lead_time");
        }
        if (!net.directed && arc.from > arc.to) {
            std::swap(arc.from, arc.to);
        }
        if (!seen.insert({arc.from, arc.to}).second) {
            throw ValidationError(arc_label(i) + ": duplicate arc between nodes " +
                                  std::to_string(arc.from) + " and " +
                                  std::to_string(arc.to));
        }
        touches_source |= arc.from == 1 || arc.to == 1;
        touches_sink |= arc.from == net.node_count || arc.to == net.node_count;
    }
    if (!touches_source) {
        throw ValidationError("no arc touches the source node 1");
    }
    if (!touches_sink) {
        throw ValidationError("no arc touches the sink node " +
                              std::to_string(net.node_count));
    }
    return net;
}

void validate_query(const Query& query) {
    if (query.demand < 1) {
        throw ValidationError("demand must be at least 1, got " +
                              std::to_string(query.demand));
    }
    if (query.time_budget < 1) {
        throw ValidationError("time budget must be at least 1, got " +
                              std::to_string(query.time_budget));
    }
}

void check_state_vector(const Network& net, const StateVector& x) {
    if (static_cast<int>(x.size()) != net.arc_count()) {
        throw ValidationError("state vector has " + std::to_string(x.size()) +
                              " components, expected " +
                              std::to_string(net.arc_count()));
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] > net.arcs[i].max_capacity) {
            throw ValidationError(arc_label(i) + ": state " + std::to_string(x[i]) +
                                  " outside 0.." +
                                  std::to_string(net.arcs[i].max_capacity));
        }
    }
}

NodeChildMatrix build_node_child_matrix(const Network& net) {
    const int n = net.node_count;

    // The matrix width is the maximum (out-)degree over nodes 1..n-1, which
    // can exceed the longest row: internal rows drop node 1.
    std::vector<int> degree(n + 1, 0);
    for (const Arc& arc : net.arcs) {
        degree[arc.from]++;
        if (!net.directed) {
            degree[arc.to]++;
        }
    }
    int width = 0;
    for (int node = 1; node < n; ++node) {
        width = std::max(width, degree[node]);
    }

    NodeChildMatrix matrix(n, width);
    std::vector<int> row;
    for (int node = 1; node < n; ++node) {
        row.clear();
        for (const Arc& arc : net.arcs) {
            int child = 0;
            if (arc.from == node) {
                child = arc.to;
            } else if (!net.directed && arc.to == node) {
                child = arc.from;
            } else {
                continue;
            }
            // Traversal never returns to the source.
            if (node != 1 && child == 1) {
                continue;
            }
            row.push_back(child);
        }
        std::sort(row.begin(), row.end());
        for (std::size_t slot = 0; slot < row.size(); ++slot) {
            matrix.set(node, static_cast<int>(slot), row[slot]);
        }
    }
    return matrix;
}

std::optional<int> arc_between(const Network& net, int s, int t) {
    for (int i = 0; i < net.arc_count(); ++i) {
        const Arc& arc = net.arcs[i];
        if (arc.from == s && arc.to == t) {
            return i;
        }
        if (!net.directed && arc.from == t && arc.to == s) {
            return i;
        }
    }
    return std::nullopt;
}

std::string format_state_vector(const StateVector& x) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << x[i];
    }
    out << ')';
    return out.str();
}

}  // namespace qpr
