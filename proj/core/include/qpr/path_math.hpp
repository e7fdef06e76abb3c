#pragma once

#include <optional>
#include <vector>

#include "qpr/network.hpp"

namespace qpr {

// A simple path from the source to the sink: a node sequence plus the arc
// index entering each node after the first.
struct MinimalPath {
    std::vector<int> nodes;
    std::vector<int> arcs;  // 0-based indices into Network::arcs

    friend bool operator==(const MinimalPath&, const MinimalPath&) = default;
};

// True iff p is a well-formed simple source-to-sink path of net.
bool is_minimal_path(const Network& net, const MinimalPath& p);

// Time needed to push a demand through an arc or a path. A zero-capacity
// route transmits nothing: its time is unbounded, which compares greater
// than every finite time.
class TransmissionTime {
public:
    static constexpr TransmissionTime unbounded() { return TransmissionTime(); }
    static constexpr TransmissionTime of(long long units) {
        TransmissionTime t;
        t.finite_ = true;
        t.units_ = units;
        return t;
    }

    constexpr bool is_unbounded() const { return !finite_; }
    constexpr long long units() const { return units_; }

    constexpr bool within(long long budget) const {
        return finite_ && units_ <= budget;
    }

    friend constexpr bool operator==(TransmissionTime a, TransmissionTime b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.units_ == b.units_);
    }
    friend constexpr bool operator<(TransmissionTime a, TransmissionTime b) {
        if (a.finite_ && b.finite_) return a.units_ < b.units_;
        return a.finite_ && !b.finite_;
    }
    friend constexpr bool operator<=(TransmissionTime a, TransmissionTime b) {
        return a < b || a == b;
    }
    friend constexpr bool operator>(TransmissionTime a, TransmissionTime b) {
        return b < a;
    }

private:
    constexpr TransmissionTime() = default;
    bool finite_ = false;
    long long units_ = 0;
};

// ceil(a / b) for a >= 0, b >= 1, without intermediate overflow.
constexpr long long ceil_div(long long a, long long b) {
    return a == 0 ? 0 : (a - 1) / b + 1;
}

// Sum of lead times along the path.
long long path_lead_time(const Network& net, const MinimalPath& p);

// Minimum of the state vector over the path's arcs.
int path_capacity(const MinimalPath& p, const StateVector& x);

// lead + ceil(demand / capacity); unbounded when capacity is zero.
TransmissionTime arc_transmission_time(long long lead, long long capacity,
                                       long long demand);

// Time to push `demand` units through path p under state x.
TransmissionTime path_transmission_time(const Network& net, const MinimalPath& p,
                                        const StateVector& x, long long demand);

// Smallest path capacity that moves `demand` units within `time_budget` over
// a path with lead time `path_lead`: ceil(demand / (time_budget - path_lead)).
// nullopt when time_budget <= path_lead, where no capacity suffices.
std::optional<long long> min_required_capacity(long long path_lead, long long demand,
                                               long long time_budget);

}  // namespace qpr
