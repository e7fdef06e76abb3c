#include "qpr/path_math.hpp"

#include <algorithm>
#include <limits>

namespace qpr {

bool is_minimal_path(const Network& net, const MinimalPath& p) {
    if (p.nodes.size() < 2 || p.arcs.size() + 1 != p.nodes.size()) {
        return false;
    }
    if (p.nodes.front() != net.source() || p.nodes.back() != net.sink()) {
        return false;
    }
    std::vector<int> sorted = p.nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    for (std::size_t i = 0; i < p.arcs.size(); ++i) {
        const int a = p.arcs[i];
        if (a < 0 || a >= net.arc_count()) {
            return false;
        }
        const Arc& arc = net.arcs[a];
        const int s = p.nodes[i];
        const int t = p.nodes[i + 1];
        const bool forward = arc.from == s && arc.to == t;
        const bool backward = !net.directed && arc.from == t && arc.to == s;
        if (!forward && !backward) {
            return false;
        }
    }
    return true;
}

long long path_lead_time(const Network& net, const MinimalPath& p) {
    long long lead = 0;
    for (int a : p.arcs) {
        lead += net.arcs[a].lead_time;
    }
    return lead;
}

int path_capacity(const MinimalPath& p, const StateVector& x) {
    int capacity = std::numeric_limits<int>::max();
    for (int a : p.arcs) {
        capacity = std::min(capacity, x[a]);
    }
    return capacity;
}

TransmissionTime arc_transmission_time(long long lead, long long capacity,
                                       long long demand) {
    if (capacity <= 0) {
        return TransmissionTime::unbounded();
    }
    return TransmissionTime::of(lead + ceil_div(demand, capacity));
}

TransmissionTime path_transmission_time(const Network& net, const MinimalPath& p,
                                        const StateVector& x, long long demand) {
    return arc_transmission_time(path_lead_time(net, p), path_capacity(p, x),
                                 demand);
}

std::optional<long long> min_required_capacity(long long path_lead, long long demand,
                                               long long time_budget) {
    if (time_budget <= path_lead) {
        return std::nullopt;
    }
    return ceil_div(demand, time_budget - path_lead);
}

}  // namespace qpr
