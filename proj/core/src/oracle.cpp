#include "qpr/oracle.hpp"

#include <algorithm>
#include <limits>

#include "qpr/enumerator.hpp"

namespace qpr {

namespace {

struct PathProfile {
    std::vector<int> arcs;
    long long lead = 0;
};

std::vector<PathProfile> profile_paths(const Network& net,
                                       const std::vector<MinimalPath>& mps) {
    std::vector<PathProfile> profiles;
    profiles.reserve(mps.size());
    for (const MinimalPath& p : mps) {
        profiles.push_back({p.arcs, path_lead_time(net, p)});
    }
    return profiles;
}

bool feasible(const std::vector<PathProfile>& profiles, const StateVector& x,
              long long demand, long long budget) {
    for (const PathProfile& p : profiles) {
        int capacity = std::numeric_limits<int>::max();
        for (int a : p.arcs) {
            capacity = std::min(capacity, x[a]);
        }
        if (capacity > 0 && p.lead + ceil_div(demand, capacity) <= budget) {
            return true;
        }
    }
    return false;
}

// Mixed-radix walk over all states x <= M in lexicographic order. Returns
// false once the space is exhausted.
bool next_state(const Network& net, StateVector& x) {
    for (int i = net.arc_count() - 1; i >= 0; --i) {
        if (x[i] < net.arcs[i].max_capacity) {
            ++x[i];
            std::fill(x.begin() + i + 1, x.end(), 0);
            return true;
        }
    }
    return false;
}

long long state_space_size(const Network& net, long long cap) {
    long long total = 1;
    for (const Arc& arc : net.arcs) {
        total *= arc.max_capacity + 1;
        if (total > cap) {
            throw CapExceededError("state space exceeds the cap of " +
                                   std::to_string(cap) + " states");
        }
    }
    return total;
}

}  // namespace

TransmissionTime rho(const Network& net, const StateVector& x, long long demand,
                     const std::vector<MinimalPath>& all_mps) {
    TransmissionTime quickest = TransmissionTime::unbounded();
    for (const MinimalPath& p : all_mps) {
        const TransmissionTime t = path_transmission_time(net, p, x, demand);
        if (t < quickest) {
            quickest = t;
        }
    }
    return quickest;
}

std::vector<StateVector> brute_force_theta_min(const Network& net,
                                               const Query& query,
                                               long long state_cap) {
    validate_query(query);
    const long long total = state_space_size(net, state_cap);
    const auto profiles = profile_paths(net, enumerate_all_mps(net));

    std::vector<char> is_feasible(static_cast<std::size_t>(total), 0);
    {
        StateVector x(net.arc_count(), 0);
        long long index = 0;
        do {
            is_feasible[static_cast<std::size_t>(index++)] =
                feasible(profiles, x, query.demand, query.time_budget);
        } while (next_state(net, x));
    }

    // Strides of the mixed-radix ranking: rank(x - e_i) = rank(x) - stride[i].
    std::vector<long long> stride(net.arc_count());
    long long s = 1;
    for (int i = net.arc_count() - 1; i >= 0; --i) {
        stride[i] = s;
        s *= net.arcs[i].max_capacity + 1;
    }

    // Feasibility is monotone in every component, so a feasible state is
    // minimal exactly when every single-step decrement is infeasible.
    std::vector<StateVector> minimal;
    StateVector x(net.arc_count(), 0);
    long long index = 0;
    do {
        if (is_feasible[static_cast<std::size_t>(index)]) {
            bool is_minimal = true;
            for (int i = 0; i < net.arc_count() && is_minimal; ++i) {
                if (x[i] > 0 &&
                    is_feasible[static_cast<std::size_t>(index - stride[i])]) {
                    is_minimal = false;
                }
            }
            if (is_minimal) {
                minimal.push_back(x);
            }
        }
        ++index;
    } while (next_state(net, x));

    return minimal;  // the walk is lexicographic, so the result already is
}

double brute_force_reliability(const Network& net,
                               const std::vector<ArcStateDistribution>& dists,
                               const Query& query, long long state_cap) {
    validate_query(query);
    validate_distributions(net, dists);
    state_space_size(net, state_cap);
    const auto profiles = profile_paths(net, enumerate_all_mps(net));

    double sum = 0.0;
    double compensation = 0.0;
    StateVector x(net.arc_count(), 0);
    do {
        if (!feasible(profiles, x, query.demand, query.time_budget)) {
            continue;
        }
        double probability = 1.0;
        for (int i = 0; i < net.arc_count(); ++i) {
            probability *= dists[i].pmf[x[i]];
        }
        const double y = probability - compensation;
        const double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    } while (next_state(net, x));

    return sum;
}

}  // namespace qpr
