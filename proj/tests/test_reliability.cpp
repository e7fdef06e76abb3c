#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qpr/enumerator.hpp"
#include "qpr/oracle.hpp"
#include "qpr/random_instance.hpp"
#include "qpr/reliability.hpp"
#include "qpr/rng.hpp"

using namespace qpr;
using test::k4_network;

TEST_CASE("pr_at_least") {
    ArcStateDistribution dist;
    dist.pmf = {0.1, 0.2, 0.7};
    CHECK(pr_at_least(dist, 1) == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(pr_at_least(dist, 0) == 1.0);
    CHECK(pr_at_least(dist, 5) == 0.0);
    CHECK(pr_at_least(dist, 2) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("pmf validation") {
    const Network net = test::single_arc_network(2, 1);
    ArcStateDistribution bad_length;
    bad_length.pmf = {0.5, 0.5};
    CHECK_THROWS_AS(validate_distributions(net, {bad_length}), ValidationError);

    ArcStateDistribution bad_sum;
    bad_sum.pmf = {0.5, 0.2, 0.2};
    CHECK_THROWS_AS(validate_distributions(net, {bad_sum}), ValidationError);

    ArcStateDistribution negative;
    negative.pmf = {1.2, -0.2, 0.0};
    CHECK_THROWS_AS(validate_distributions(net, {negative}), ValidationError);

    ArcStateDistribution ok;
    ok.pmf = {0.2, 0.3, 0.5};
    CHECK_NOTHROW(validate_distributions(net, {ok}));
}

TEST_CASE("union probability of simple vector sets") {
    const Network net = k4_network();
    const auto uniform = test::uniform_dists(net);

    SUBCASE("empty set") {
        const auto result = union_probability(net, uniform, {});
        CHECK(result.value == 0.0);
        CHECK(result.solution_count == 0);
        CHECK(result.term_count == 0);
    }
    SUBCASE("point mass at the max capacities") {
        const auto result = union_probability(
            net, test::point_dists(net, true),
            {{0, 0, 1, 0, 0, 0}, {0, 2, 0, 0, 0, 2}});
        CHECK(result.value == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(result.solution_count == 2);
        CHECK(result.term_count == 3);
    }
    SUBCASE("singleton equals the product of tail probabilities") {
        // P(x3 >= 1) = 0.8 with everything else free.
        std::vector<ArcStateDistribution> dists = test::point_dists(net, true);
        dists[2].pmf.assign(net.arcs[2].max_capacity + 1, 0.0);
        dists[2].pmf[0] = 0.2;
        dists[2].pmf[6] = 0.8;
        const auto result = union_probability(net, dists, {{0, 0, 1, 0, 0, 0}});
        CHECK(result.value == doctest::Approx(0.8).epsilon(1e-12));

        double expected = 1.0;
        StateVector x{0, 0, 1, 0, 0, 0};
        for (int i = 0; i < net.arc_count(); ++i) {
            expected *= pr_at_least(dists[i], x[i]);
        }
        CHECK(result.value == doctest::Approx(expected).epsilon(1e-15));
    }
}

TEST_CASE("union probability on the k4 demo network with uniform pmfs") {
    const Network net = k4_network();
    const auto vectors = find_minimal_vectors(net, {4, 7});
    const auto result = union_probability(net, test::uniform_dists(net), vectors);
    // By hand: 6/7 + (3/5)(5/7) - (6/7)(3/5)(5/7) = 45/49.
    CHECK(result.value == doctest::Approx(45.0 / 49.0).epsilon(1e-12));
    CHECK(result.value ==
          doctest::Approx(brute_force_reliability(net, test::uniform_dists(net),
                                                  {4, 7}))
              .epsilon(1e-12));
}

TEST_CASE("union probability input validation") {
    const Network net = k4_network();
    const auto uniform = test::uniform_dists(net);
    CHECK_THROWS_AS(union_probability(net, uniform, {{9, 0, 0, 0, 0, 0}}),
                    ValidationError);
    CHECK_THROWS_AS(
        union_probability(net, uniform, {{0, 0, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}),
        ValidationError);
    CHECK_THROWS_AS(
        union_probability(net, uniform, {{0, 0, 1, 0, 0, 0}, {0, 2, 0, 0, 0, 2}}, 1),
        CapExceededError);
}

TEST_CASE("adding a vector never decreases the union probability") {
    for (int trial = 0; trial < 60; ++trial) {
        const auto instance = make_random_instance(derive_seed(808, trial));
        const Network& net = instance.network;
        const auto vectors = brute_force_theta_min(net, instance.query);
        if (vectors.empty()) {
            continue;
        }
        double previous = 0.0;
        std::vector<StateVector> prefix;
        for (const StateVector& v : vectors) {
            prefix.push_back(v);
            const double value =
                union_probability(net, instance.distributions, prefix).value;
            CHECK(value >= previous - 1e-12);
            previous = value;
        }
    }
}

TEST_CASE("union probability equals brute force on random instances") {
    for (int trial = 0; trial < 100; ++trial) {
        const auto instance = make_random_instance(derive_seed(2468, trial));
        const auto vectors = find_minimal_vectors(instance.network, instance.query);
        const auto exact =
            union_probability(instance.network, instance.distributions, vectors);
        const double brute = brute_force_reliability(
            instance.network, instance.distributions, instance.query);
        CHECK(std::abs(exact.value - brute) <= 1e-9);
    }
}

TEST_CASE("monte carlo on point-mass distributions") {
    const Network net = k4_network();
    const auto at_max = monte_carlo_reliability(net, test::point_dists(net, true),
                                                {4, 7}, 2000, 99);
    CHECK(at_max.estimate == 1.0);
    CHECK(at_max.half_width == 0.0);

    const auto at_zero = monte_carlo_reliability(net, test::point_dists(net, false),
                                                 {4, 7}, 2000, 99);
    CHECK(at_zero.estimate == 0.0);
}

TEST_CASE("monte carlo is deterministic for a fixed seed") {
    const Network net = k4_network();
    const auto uniform = test::uniform_dists(net);
    const auto a = monte_carlo_reliability(net, uniform, {4, 7}, 20000, 31);
    const auto b = monte_carlo_reliability(net, uniform, {4, 7}, 20000, 31);
    CHECK(a.estimate == b.estimate);
    CHECK(a.half_width == b.half_width);
    CHECK(a.samples == 20000);

    const auto c = monte_carlo_reliability(net, uniform, {4, 7}, 20000, 32);
    CHECK(a.estimate != c.estimate);  // different stream
}

TEST_CASE("monte carlo tracks the exact value") {
    const Network net = k4_network();
    const auto uniform = test::uniform_dists(net);
    const auto vectors = find_minimal_vectors(net, {4, 7});
    const double exact = union_probability(net, uniform, vectors).value;
    const auto mc = monte_carlo_reliability(net, uniform, {4, 7}, 100000, 5);
    CHECK(std::abs(mc.estimate - exact) <= 3.0 * mc.half_width);
}

TEST_CASE("reliability is monotone in the query through the full pipeline") {
    const Network net = k4_network();
    const auto uniform = test::uniform_dists(net);
    const auto evaluate = [&](long long d, long long budget) {
        const auto vectors = find_minimal_vectors(net, {d, budget});
        return union_probability(net, uniform, vectors).value;
    };
    for (long long d = 1; d <= 6; ++d) {
        for (long long budget = 1; budget <= 10; ++budget) {
            const double here = evaluate(d, budget);
            CHECK(evaluate(d + 1, budget) <= here + 1e-12);
            CHECK(evaluate(d, budget + 1) >= here - 1e-12);
        }
    }
}
