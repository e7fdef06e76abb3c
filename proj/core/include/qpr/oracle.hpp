#pragma once

#include <vector>

#include "qpr/network.hpp"
#include "qpr/path_math.hpp"
#include "qpr/reliability.hpp"

namespace qpr {

// Brute-force references for verifying the enumerator and the exact
// reliability on small instances. These deliberately share no pruning logic
// with find_minimal_vectors: they walk raw state vectors and raw path lists.

inline constexpr long long kDefaultStateSpaceCap = 10'000'000;

// Quickest transmission time of `demand` units under state x: the minimum
// path transmission time over all minimal paths. `all_mps` must be the
// complete list from enumerate_all_mps.
TransmissionTime rho(const Network& net, const StateVector& x, long long demand,
                     const std::vector<MinimalPath>& all_mps);

// Enumerates every state vector below the max capacities, keeps those whose
// quickest time fits the budget, and returns the minimal elements under
// componentwise <=, sorted lexicographically. Throws CapExceededError when
// the state space exceeds state_cap.
std::vector<StateVector> brute_force_theta_min(
    const Network& net, const Query& query,
    long long state_cap = kDefaultStateSpaceCap);

// Sum of Pr(X) over every state X whose quickest time fits the budget.
double brute_force_reliability(const Network& net,
                               const std::vector<ArcStateDistribution>& dists,
                               const Query& query,
                               long long state_cap = kDefaultStateSpaceCap);

}  // namespace qpr
