#pragma once

#include <cstdint>
#include <vector>

#include "qpr/network.hpp"

namespace qpr {

// Probability mass over the capacity states {0, ..., max_capacity} of one
// arc. Entry k is the probability of capacity k.
struct ArcStateDistribution {
    std::vector<double> pmf;

    int max_state() const { return static_cast<int>(pmf.size()) - 1; }

    friend bool operator==(const ArcStateDistribution&,
                           const ArcStateDistribution&) = default;
};

// Throws ValidationError unless the pmf has exactly max_capacity+1 entries
// in [0,1] summing to 1 within 1e-9.
void validate_pmf(const ArcStateDistribution& dist, int max_capacity);

// validate_pmf across the network: one distribution per arc, errors name the
// arc.
void validate_distributions(const Network& net,
                            const std::vector<ArcStateDistribution>& dists);

// P(state >= level). 1 for level <= 0, 0 beyond the distribution's support.
double pr_at_least(const ArcStateDistribution& dist, int level);

struct ReliabilityResult {
    double value = 0.0;
    int solution_count = 0;    // number of minimal vectors
    long long term_count = 0;  // inclusion-exclusion terms evaluated
};

inline constexpr int kDefaultUnionCap = 25;

// Exact probability that the network state dominates at least one of the
// minimal vectors, by inclusion-exclusion over subset joins: a subset
// contributes sign * prod_i P(x_i >= max of the subset's component i).
// Sums are compensated (Kahan). Throws ValidationError on a vector exceeding
// the max capacities or on duplicate vectors, and CapExceededError when the
// vector count exceeds max_vectors (use Monte Carlo instead).
ReliabilityResult union_probability(const Network& net,
                                    const std::vector<ArcStateDistribution>& dists,
                                    const std::vector<StateVector>& minimal_vectors,
                                    int max_vectors = kDefaultUnionCap);

struct MonteCarloResult {
    double estimate = 0.0;
    double half_width = 0.0;  // 95% normal-approximation half-width
    long long samples = 0;
};

// Estimates the probability that a state sampled from the per-arc
// distributions moves the demand within the time budget. Deterministic for a
// fixed seed: samples are drawn in fixed-size chunks with per-chunk derived
// seeds, so the result does not depend on evaluation order.
MonteCarloResult monte_carlo_reliability(const Network& net,
                                         const std::vector<ArcStateDistribution>& dists,
                                         const Query& query, long long samples,
                                         std::uint64_t seed);

}  // namespace qpr
