#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "gcount/bounds.hpp"
#include "gcount/pairing.hpp"
#include "gcount/stats.hpp"
#include "oracles.hpp"

using namespace gcount;

TEST_CASE("pairing enumeration counts") {
    int count4 = 0, count6 = 0, count8 = 0;
    for_each_pairing(4, [&](const std::vector<int>&) { ++count4; });
    for_each_pairing(6, [&](const std::vector<int>&) { ++count6; });
    for_each_pairing(8, [&](const std::vector<int>&) { ++count8; });
    CHECK(count4 == 3);
    CHECK(count6 == 15);
    CHECK(count8 == 105);
    CHECK_THROWS_AS(for_each_pairing(3, [](const std::vector<int>&) {}),
                    invalid_parameter_error);
}

TEST_CASE("sample_pairing basics") {
    const auto unique = sample_pairing(2, 1, 5);
    CHECK(unique.mate == std::vector<int>{1, 0});

    const auto loop = sample_pairing(1, 2, 5);
    CHECK(loop.mate == std::vector<int>{1, 0});
    const auto mg = project(loop);
    CHECK(has_loop(mg));
    CHECK_FALSE(is_simple(mg));

    CHECK_THROWS_AS(sample_pairing(1, 3, 0), invalid_parameter_error);
    CHECK_THROWS_AS(sample_pairing(3, 1, 0), invalid_parameter_error);
}

TEST_CASE("sample_pairing is uniform (n=2, delta=2)") {
    std::map<std::vector<int>, std::uint64_t> counts;
    std::vector<std::vector<int>> all;
    for_each_pairing(4, [&](const std::vector<int>& mate) { all.push_back(mate); });
    const std::uint64_t trials = 30000;
    for (std::uint64_t t = 0; t < trials; ++t) ++counts[sample_pairing(2, 2, 1000 + t).mate];
    std::vector<std::uint64_t> observed;
    for (const auto& mate : all) observed.push_back(counts[mate]);
    CHECK(observed.size() == 3);
    CHECK(chi_square_gof_uniform(observed).pvalue > 1e-3);
}

TEST_CASE("generator_algorithm1 matches the uniform law and the per-step rate") {
    const auto unique = generator_algorithm1(2, 1, {0, 1}, 3);
    CHECK(unique.mate == std::vector<int>{1, 0});
    CHECK_THROWS_AS(generator_algorithm1(2, 2, {0}, 3), invalid_parameter_error);
    CHECK_THROWS_AS(generator_algorithm1(2, 2, {0, -1}, 3), invalid_parameter_error);

    std::map<std::vector<int>, std::uint64_t> counts;
    const std::vector<int> f{0, 1}; // one cell per class
    const std::uint64_t trials = 30000;
    double expected_hits = 0.0, variance = 0.0;
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<Alg1Step> steps;
        const auto p = generator_algorithm1(2, 2, f, 2000 + t, &steps);
        ++counts[p.mate];
        for (const auto& s : steps) {
            const double rate =
                static_cast<double>(s.cmax_size - 1) / static_cast<double>(s.u_size - 1);
            expected_hits += rate;
            variance += rate * (1.0 - rate);
            hits += s.hit ? 1 : 0;
        }
    }
    std::vector<std::uint64_t> observed;
    for_each_pairing(4, [&](const std::vector<int>& mate) { observed.push_back(counts[mate]); });
    CHECK(chi_square_gof_uniform(observed).pvalue > 1e-3);
    // Aggregate hit count within 4 sigma of its Poisson-binomial mean.
    CHECK(std::fabs(static_cast<double>(hits) - expected_hits) <=
          4.0 * std::sqrt(variance) + 1e-9);
}

TEST_CASE("projection") {
    CHECK(project(sample_pairing(2, 1, 1)).edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(is_simple(project(sample_pairing(2, 1, 1))));

    // n=2, delta=2: every pairing projects to a loop pair or a double edge.
    for_each_pairing(4, [&](const std::vector<int>& mate) {
        Pairing p;
        p.n = 2;
        p.delta = 2;
        p.mate = mate;
        REQUIRE_FALSE(is_simple(project(p)));
    });

    MultiGraph doubled{2, {{0, 1}, {0, 1}}};
    CHECK(simplify(doubled).edge_count() == 1);
    CHECK(count_multigraph_colorings(doubled, 2) == 2);
    MultiGraph looped{1, {{0, 0}}};
    CHECK(count_multigraph_colorings(looped, 3) == 0);
    CHECK_THROWS_AS(simplify(looped), invalid_parameter_error);
}

TEST_CASE("projected multigraphs are delta-regular with loops counted twice") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto p = sample_pairing(5, 4, seed);
        const auto mg = project(p);
        std::vector<int> deg(mg.n, 0);
        for (auto [u, v] : mg.edges) {
            deg[u] += 1;
            deg[v] += 1; // a loop contributes 2 to its endpoint
        }
        for (int v = 0; v < mg.n; ++v) REQUIRE(deg[v] == 4);
    }
}

TEST_CASE("rejection sampler output contract") {
    const auto k2 = sample_simple_triangle_free(2, 1, 9);
    CHECK(k2.attempts == 1);
    CHECK(k2.graph == Graph::from_edge_list(2, {{0, 1}}));

    // n=6, delta=2: only 6-cycles survive the simple + triangle-free filter.
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto res = sample_simple_triangle_free(6, 2, 100 + seed);
        CHECK(is_regular(res.graph, 2));
        CHECK(is_triangle_free(res.graph));
        CHECK(is_connected(res.graph));
    }

    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto res = sample_simple_triangle_free(10, 3, 200 + seed);
        CHECK(is_regular(res.graph, 3));
        CHECK(is_triangle_free(res.graph));
    }

    CHECK_THROWS_WITH_AS(sample_simple_triangle_free(2, 2, 0, 5),
                         doctest::Contains("max attempts"), std::runtime_error);
}

TEST_CASE("coloring estimates") {
    const auto exact2 = estimate_expected_colorings(2, 1, 2, 50, 3);
    CHECK(exact2.mean == doctest::Approx(2.0));
    CHECK(exact2.std_error == doctest::Approx(0.0));

    const auto loops = estimate_expected_colorings(1, 2, 3, 50, 3);
    CHECK(loops.mean == doctest::Approx(0.0));

    // n=2, delta=2, q=2: exact expectation 4/3 over the 3 pairings.
    mpq_class exact_mean = 0;
    int pairings = 0;
    for_each_pairing(4, [&](const std::vector<int>& mate) {
        Pairing p;
        p.n = 2;
        p.delta = 2;
        p.mate = mate;
        exact_mean += mpq_class(count_multigraph_colorings(project(p), 2));
        ++pairings;
    });
    exact_mean /= pairings;
    exact_mean.canonicalize();
    CHECK(exact_mean == mpq_class(4, 3));

    const auto est = estimate_expected_colorings(2, 2, 2, 20000, 17);
    CHECK(std::fabs(est.mean - 4.0 / 3.0) <= 3.0 * est.std_error);
    CHECK(est.ceiling == doctest::Approx(2.0)); // (1/2)^2 * n * q^n = 1/4 * 2 * 4
}

TEST_CASE("gamma rate") {
    CHECK(gamma_rate(8) == doctest::Approx(2.0 * std::log(8.0) / 8.0));
    for (long long n = 8; n < 100; ++n) CHECK(gamma_rate(n) > gamma_rate(n + 1));
}
