#include "qpr/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qpr/enumerator.hpp"
#include "qpr/oracle.hpp"
#include "qpr/rng.hpp"

namespace qpr {

namespace {

constexpr double kProbabilityTolerance = 1e-9;

struct KahanSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double value) {
        const double y = value - compensation;
        const double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }
};

// Inclusion-exclusion over subsets of the minimal vectors. Each recursion
// depth owns one scratch row for the componentwise max (join) of its include
// branch, so a subset costs O(m) and the walk allocates nothing.
class UnionAccumulator {
public:
    UnionAccumulator(const std::vector<StateVector>& vectors,
                     const std::vector<std::vector<double>>& tails, int arc_count)
        : vectors_(vectors),
          tails_(tails),
          rows_(vectors.size(), std::vector<int>(arc_count, 0)),
          root_(arc_count, 0) {}

    double run() {
        descend(0, 0, root_);
        return total_.sum;
    }

private:
    void descend(std::size_t next, int included, const std::vector<int>& join) {
        if (next == vectors_.size()) {
            if (included > 0) {
                double product = 1.0;
                for (std::size_t i = 0; i < join.size(); ++i) {
                    product *= tails_[i][join[i]];
                }
                total_.add(included % 2 == 1 ? product : -product);
            }
            return;
        }
        descend(next + 1, included, join);

        const StateVector& v = vectors_[next];
        std::vector<int>& extended = rows_[next];
        for (std::size_t i = 0; i < join.size(); ++i) {
            extended[i] = std::max(join[i], v[i]);
        }
        descend(next + 1, included + 1, extended);
    }

    const std::vector<StateVector>& vectors_;
    const std::vector<std::vector<double>>& tails_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> root_;
    KahanSum total_;
};

double clamp_probability(double value, const char* what) {
    if (value < -kProbabilityTolerance || value > 1.0 + kProbabilityTolerance) {
        throw std::logic_error(std::string(what) + " outside [0,1]: " +
                               std::to_string(value));
    }
    return std::clamp(value, 0.0, 1.0);
}

}  // namespace

void validate_pmf(const ArcStateDistribution& dist, int max_capacity) {
    const auto& pmf = dist.pmf;
    const int expected = max_capacity + 1;
    if (static_cast<int>(pmf.size()) != expected) {
        throw ValidationError("pmf has " + std::to_string(pmf.size()) +
                              " entries, expected max_capacity+1 = " +
                              std::to_string(expected));
    }
    double sum = 0.0;
    for (double p : pmf) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ValidationError("pmf entry outside [0,1]");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
        throw ValidationError("pmf sums to " + std::to_string(sum) +
                              ", expected 1");
    }
}

void validate_distributions(const Network& net,
                            const std::vector<ArcStateDistribution>& dists) {
    if (static_cast<int>(dists.size()) != net.arc_count()) {
        throw ValidationError("expected " + std::to_string(net.arc_count()) +
                              " distributions, got " + std::to_string(dists.size()));
    }
    for (int i = 0; i < net.arc_count(); ++i) {
        try {
            validate_pmf(dists[i], net.arcs[i].max_capacity);
        } catch (const ValidationError& e) {
            throw ValidationError("arc " + std::to_string(i + 1) + ": " + e.what());
        }
    }
}

double pr_at_least(const ArcStateDistribution& dist, int level) {
    if (level <= 0) {
        return 1.0;
    }
    if (level > dist.max_state()) {
        return 0.0;
    }
    double tail = 0.0;
    for (int state = dist.max_state(); state >= level; --state) {
        tail += dist.pmf[state];
    }
    return tail;
}

ReliabilityResult union_probability(const Network& net,
                                    const std::vector<ArcStateDistribution>& dists,
                                    const std::vector<StateVector>& minimal_vectors,
                                    int max_vectors) {
    validate_distributions(net, dists);
    for (const StateVector& v : minimal_vectors) {
        check_state_vector(net, v);
    }
    {
        std::set<StateVector> unique(minimal_vectors.begin(), minimal_vectors.end());
        if (unique.size() != minimal_vectors.size()) {
            throw ValidationError("minimal vectors are not pairwise distinct");
        }
    }

    const int sigma = static_cast<int>(minimal_vectors.size());
    if (sigma == 0) {
        return {0.0, 0, 0};
    }
    if (sigma > max_vectors) {
        throw CapExceededError(std::to_string(sigma) +
                               " minimal vectors exceed the subset cap of " +
                               std::to_string(max_vectors) + "; use Monte Carlo");
    }

    // Tail probabilities per arc, indexed by level 0..M_i (level 0 = 1).
    std::vector<std::vector<double>> tails(net.arc_count());
    for (int i = 0; i < net.arc_count(); ++i) {
        tails[i].resize(net.arcs[i].max_capacity + 1);
        for (int level = 0; level <= net.arcs[i].max_capacity; ++level) {
            tails[i][level] = pr_at_least(dists[i], level);
        }
    }

    UnionAccumulator accumulator(minimal_vectors, tails, net.arc_count());
    const double value = clamp_probability(accumulator.run(), "union probability");
    return {value, sigma, (1LL << sigma) - 1};
}

MonteCarloResult monte_carlo_reliability(const Network& net,
                                         const std::vector<ArcStateDistribution>& dists,
                                         const Query& query, long long samples,
                                         std::uint64_t seed) {
    validate_distributions(net, dists);
    validate_query(query);
    if (samples < 1) {
        throw ValidationError("sample count must be at least 1");
    }

    const auto all_mps = enumerate_all_mps(net);

    std::vector<std::vector<double>> cdfs(net.arc_count());
    for (int i = 0; i < net.arc_count(); ++i) {
        double running = 0.0;
        for (double p : dists[i].pmf) {
            running += p;
            cdfs[i].push_back(running);
        }
        cdfs[i].back() = 1.0;
    }

    // Fixed-size chunks with derived seeds keep the estimate independent of
    // evaluation order.
    constexpr long long kChunk = 8192;
    long long hits = 0;
    StateVector x(net.arc_count(), 0);
    for (long long chunk = 0; chunk * kChunk < samples; ++chunk) {
        std::mt19937_64 gen(derive_seed(seed, static_cast<std::uint64_t>(chunk)));
        const long long begin = chunk * kChunk;
        const long long end = std::min(samples, begin + kChunk);
        for (long long s = begin; s < end; ++s) {
            for (int i = 0; i < net.arc_count(); ++i) {
                const double u = uniform01(gen);
                const auto& cdf = cdfs[i];
                int level = 0;
                while (cdf[level] < u) {
                    ++level;
                }
                x[i] = level;
            }
            if (rho(net, x, query.demand, all_mps).within(query.time_budget)) {
                ++hits;
            }
        }
    }

    const double estimate = static_cast<double>(hits) / static_cast<double>(samples);
    const double half_width =
        1.96 * std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(samples));
    return {estimate, half_width, samples};
}

}  // namespace qpr
