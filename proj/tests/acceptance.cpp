// Acceptance suite: one check per criterion, one PASS/FAIL line each, with
// every tolerance pinned in code. Returns nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gcount/bounds.hpp"
#include "gcount/coupon.hpp"
#include "gcount/cover.hpp"
#include "gcount/exact_count.hpp"
#include "gcount/graph.hpp"
#include "gcount/pairing.hpp"
#include "gcount/partial.hpp"
#include "gcount/stats.hpp"
#include "oracles.hpp"

using namespace gcount;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
    bool pass;
    std::string detail;
};

// All (q!)^m covers of g with one permutation matching per edge.
template <class Visit>
void for_each_perfect_matching_cover(const Graph& g, int q, Visit&& visit) {
    std::vector<int> base(q);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));

    std::vector<std::size_t> pick(g.edge_count(), 0);
    for (;;) {
        DPCover cover;
        cover.base = g;
        cover.fold = q;
        cover.matchings.resize(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            MatchingPairs pairs;
            for (int i = 0; i < q; ++i) pairs.emplace_back(i, perms[pick[e]][i]);
            cover.matchings[e] = std::move(pairs);
        }
        visit(cover);
        int pos = g.edge_count() - 1;
        while (pos >= 0 && ++pick[pos] == perms.size()) pick[pos--] = 0;
        if (pos < 0) break;
    }
}

// 1. |pcol(G)| >= (1 - 1/q)^m q^n on the full triangle-free corpus, n <= 6,
//    q in {1,2,3,4}, exact rational comparison.
Outcome criterion_partial_bound() {
    long long pairs = 0;
    for (int n = 1; n <= 6; ++n) {
        bool ok = true;
        std::string bad;
        for_each_labeled_graph(n, [&](const Graph& g, std::uint64_t) {
            if (!ok || !is_triangle_free(g)) return;
            for (int q = 1; q <= 4; ++q) {
                const auto cover = canonical_cover(g, q);
                const mpz_class pcol = count_partial_colorings(cover, all_vertices(g)).value;
                const mpq_class bound =
                    partial_lower_bound_exact(g.vertex_count(), g.edge_count(), q);
                ++pairs;
                if (mpq_class(pcol) < bound) {
                    ok = false;
                    bad = "pcol " + pcol.get_str() + " < bound at q=" + std::to_string(q);
                    return;
                }
            }
        });
        if (!ok) return {false, bad};
    }
    return {true, std::to_string(pairs) + " (graph,q) pairs compared exactly"};
}

// 2. Petersen main-bound spot check at q in {12,16,20}: deletion-contraction
//    count vs eq. (1), log comparison at 10 significant digits; the counts are
//    also pinned against the published chromatic polynomial.
Outcome criterion_main_bound_petersen() {
    const Graph pet = petersen_graph();
    const std::map<int, mpz_class> published = {
        {12, mpz_class("16774966560")},
        {16, mpz_class("417515696640")},
        {20, mpz_class("4743687388320")},
    };
    std::ostringstream detail;
    for (const auto& [q, expected] : published) {
        const auto counted = count_colorings_deletion_contraction(pet, q);
        if (counted.value != expected)
            return {false, "deletion-contraction disagrees with the published polynomial at q=" +
                               std::to_string(q)};
        const auto bound = main_lower_bound(10, 15, 3, q);
        if (bound.vacuous) return {false, "bound unexpectedly vacuous at q=" + std::to_string(q)};
        const double exact_log = log_mpz(counted.value);
        const double tolerance = 1e-10 * std::max(1.0, std::fabs(bound.log_value));
        if (exact_log < bound.log_value - tolerance)
            return {false, "log c(G,q) below the bound at q=" + std::to_string(q)};
        detail << "q=" << q << ": log c=" << exact_log << " >= " << bound.log_value << "  ";
    }
    return {true, detail.str()};
}

// 3. Bipartite baseline c(G,q) >= (1 - 1/q)^m q^n over all bipartite graphs
//    on <= 6 vertices, q <= 4, exact.
Outcome criterion_bipartite_baseline() {
    long long pairs = 0;
    for (int n = 1; n <= 6; ++n) {
        bool ok = true;
        std::string bad;
        for_each_labeled_graph(n, [&](const Graph& g, std::uint64_t) {
            if (!ok || !is_bipartite(g)) return;
            for (int q = 1; q <= 4; ++q) {
                const mpz_class c = count_colorings(g, q).value;
                const mpq_class bound =
                    partial_lower_bound_exact(g.vertex_count(), g.edge_count(), q);
                ++pairs;
                if (mpq_class(c) < bound) {
                    ok = false;
                    bad = "c " + c.get_str() + " < bound at q=" + std::to_string(q);
                    return;
                }
            }
        });
        if (!ok) return {false, bad};
    }
    return {true, std::to_string(pairs) + " (graph,q) pairs compared exactly"};
}

// 4. c(G,q) <= i(G)^q over the full <= 6-vertex corpus, q <= 4; i(C_5) = 11
//    and i(P_3) = 5 exactly.
Outcome criterion_independent_chain() {
    if (count_independent_sets(cycle_graph(5)).value != 11) return {false, "i(C_5) != 11"};
    if (count_independent_sets(path_graph(3)).value != 5) return {false, "i(P_3) != 5"};
    long long pairs = 0;
    for (int n = 1; n <= 6; ++n) {
        bool ok = true;
        std::string bad;
        for_each_labeled_graph(n, [&](const Graph& g, std::uint64_t) {
            if (!ok) return;
            const mpz_class indep = count_independent_sets(g).value;
            for (int q = 1; q <= 4; ++q) {
                const mpz_class c = count_colorings(g, q).value;
                mpz_class indep_pow;
                mpz_pow_ui(indep_pow.get_mpz_t(), indep.get_mpz_t(),
                           static_cast<unsigned long>(q));
                ++pairs;
                if (c > indep_pow) {
                    ok = false;
                    bad = "c > i^q at q=" + std::to_string(q);
                    return;
                }
            }
        });
        if (!ok) return {false, bad};
    }
    return {true, std::to_string(pairs) + " comparisons, i(C_5)=11, i(P_3)=5"};
}

// 5. Random-cover expectation: the exact average of H-coloring counts over
//    ALL per-edge perfect matchings equals (1 - 1/q)^m q^n for K_2, P_3, C_4
//    with q in {2,3}; sampled minima stay at or below that value.
Outcome criterion_random_cover_expectation() {
    const std::vector<std::pair<std::string, Graph>> graphs = {
        {"K_2", Graph::from_edge_list(2, {{0, 1}})},
        {"P_3", path_graph(3)},
        {"C_4", cycle_graph(4)},
    };
    for (const auto& [name, g] : graphs) {
        for (int q = 2; q <= 3; ++q) {
            mpq_class total = 0;
            long long covers = 0;
            for_each_perfect_matching_cover(g, q, [&](const DPCover& cover) {
                total += mpq_class(count_H_colorings(cover).value);
                ++covers;
            });
            mpq_class mean = total / static_cast<long>(covers);
            mean.canonicalize();
            const mpq_class expected =
                partial_lower_bound_exact(g.vertex_count(), g.edge_count(), q);
            if (mean != expected)
                return {false, name + " q=" + std::to_string(q) + ": mean " + mean.get_str() +
                                   " != " + expected.get_str()};
            mpz_class sampled_min = -1;
            for (std::uint64_t seed = 0; seed < 50; ++seed) {
                const mpz_class count =
                    count_H_colorings(random_cover(g, q, 4242 + seed)).value;
                if (sampled_min < 0 || count < sampled_min) sampled_min = count;
            }
            if (mpq_class(sampled_min) > expected)
                return {false, name + " q=" + std::to_string(q) + ": sampled min " +
                                   sampled_min.get_str() + " above the expectation"};
        }
    }
    return {true, "6 (graph,q) cases: exact mean equality and sampled minima at or below"};
}

// 6. Coupon oracle equivalence on 200 random instances with state space
//    <= 10^6: exact rational equality with exhaustive enumeration, sum-of-rho
//    <= k exactly, and E >= q exp(-k/q) at 12 digits.
Outcome criterion_coupon_oracle() {
    int checked = 0;
    for (std::uint64_t t = 0; t < 200; ++t) {
        const int q = 1 + static_cast<int>(t % 10);
        const int k = static_cast<int>(t % 7);
        CouponInstance inst = random_instance(q, k, 10'000 + t);
        double space = 1.0;
        for (int s : inst.sizes) space *= s + 1;
        std::uint64_t bump = 0;
        while (space > 1e6) {
            inst = random_instance(q, k, 20'000 + t + 1000 * ++bump);
            space = 1.0;
            for (int s : inst.sizes) space *= s + 1;
        }
        const mpq_class exact = exact_expected_survivors(inst);
        if (exact != oracle::exhaustive_expected_survivors(inst))
            return {false, "expectation mismatch at instance " + std::to_string(t)};
        mpq_class rho_sum = 0;
        for (int a = 0; a < inst.q; ++a) rho_sum += rho(inst, a);
        if (rho_sum > inst.k())
            return {false, "sum of rho exceeds k at instance " + std::to_string(t)};
        const double jensen = jensen_lower_bound(inst.q, inst.k());
        if (exact.get_d() < jensen * (1.0 - 1e-12))
            return {false, "Jensen bound violated at instance " + std::to_string(t)};
        ++checked;
    }
    return {true, "200 instances: oracle equality, sum-rho <= k, Jensen at 1e-12"};
}

// 7. Negative correlation of the hit indicators: exact enumeration for all
//    index sets of size <= 3 on 50 small random instances.
Outcome criterion_negative_correlation() {
    long long comparisons = 0;
    for (std::uint64_t t = 0; t < 50; ++t) {
        const int q = 2 + static_cast<int>(t % 4);
        const int k = 1 + static_cast<int>(t % 4);
        const auto inst = random_instance(q, k, 30'000 + t);
        const auto joint = oracle::joint_hit_counts(inst, 3);
        std::vector<mpz_class> single(inst.q, 0);
        for (const auto& [key, count] : joint.joint)
            if (key.size() == 1) single[key[0]] = count;
        for (const auto& [key, count] : joint.joint) {
            if (key.size() < 2) continue;
            mpz_class lhs = count;
            for (std::size_t s = 1; s < key.size(); ++s) lhs *= joint.space;
            mpz_class rhs = 1;
            for (int a : key) rhs *= single[a];
            ++comparisons;
            if (lhs > rhs)
                return {false, "positive correlation found at instance " + std::to_string(t)};
        }
    }
    return {true, std::to_string(comparisons) + " joint-probability comparisons, all exact"};
}

// 8. Uniformity of sample_pairing and generator_algorithm1 over all pairings
//    for delta*n in {4,6,8}: chi-square goodness of fit at significance 1e-3,
//    1e5 trials per sampler.
Outcome criterion_pairing_uniformity() {
    const std::vector<std::pair<int, int>> shapes = {{2, 2}, {3, 2}, {4, 2}};
    std::ostringstream detail;
    for (auto [n, delta] : shapes) {
        const int points = n * delta;
        std::map<std::vector<int>, std::size_t> index;
        for_each_pairing(points, [&](const std::vector<int>& mate) {
            const std::size_t id = index.size();
            index[mate] = id;
        });
        std::vector<int> f(n);
        for (int i = 0; i < n; ++i) f[i] = i % 2;

        std::vector<std::uint64_t> uniform_counts(index.size(), 0);
        std::vector<std::uint64_t> generator_counts(index.size(), 0);
        const std::uint64_t trials = 100'000;
        for (std::uint64_t t = 0; t < trials; ++t) {
            ++uniform_counts[index.at(sample_pairing(n, delta, 50'000 + t).mate)];
            ++generator_counts[index.at(generator_algorithm1(n, delta, f, 90'000 + t).mate)];
        }
        const auto gof_uniform = chi_square_gof_uniform(uniform_counts);
        const auto gof_generator = chi_square_gof_uniform(generator_counts);
        if (gof_uniform.pvalue <= 1e-3)
            return {false, "sample_pairing fails uniformity at delta*n=" +
                               std::to_string(points)};
        if (gof_generator.pvalue <= 1e-3)
            return {false, "generator_algorithm1 fails uniformity at delta*n=" +
                               std::to_string(points)};
        detail << points << " points: p=" << gof_uniform.pvalue << "/"
               << gof_generator.pvalue << "  ";
    }
    return {true, detail.str()};
}

// 9. Markov mechanism: Monte Carlo E[c(G(P),q)] at (n=10, delta=3, q=3) sits
//    at least 3 standard errors below the (1-1/q)^(dn/2) n q^n ceiling, and
//    the (n=2, delta=2, q=2) case matches full enumeration exactly.
Outcome criterion_markov_mechanism() {
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
    if (exact_mean != mpq_class(4, 3))
        return {false, "tiny-case expectation " + exact_mean.get_str() + " != 4/3"};

    const auto est = estimate_expected_colorings(10, 3, 3, 500, 777);
    const double margin = est.ceiling - est.mean;
    if (margin < 3.0 * est.std_error)
        return {false, "margin " + std::to_string(margin) + " below 3 standard errors"};
    std::ostringstream detail;
    detail << "tiny case = 4/3 exactly; mean " << est.mean << " +- " << est.std_error
           << " vs ceiling " << est.ceiling;
    return {true, detail.str()};
}

// 10. Completion correctness: 1000 seeded complete_good runs on corpus covers
//     with non-empty lists always produce proper total extensions; the LLL
//     product at Delta=q decreases over {50,100,200} and lands within 0.05 of
//     2e/25.
Outcome criterion_completion() {
    std::vector<DPCover> covers;
    covers.push_back(canonical_cover(cycle_graph(5), 3));
    covers.push_back(canonical_cover(cycle_graph(6), 4));
    covers.push_back(canonical_cover(path_graph(5), 3));
    covers.push_back(random_cover(star_graph(4), 5, 1));
    covers.push_back(random_cover(petersen_graph(), 4, 2));
    covers.push_back(random_cover(cycle_graph(6), 3, 3));

    for (std::uint64_t t = 0; t < 1000; ++t) {
        const auto& cover = covers[t % covers.size()];
        const int n = cover.base.vertex_count();
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        const auto g = greedy_partial_sampler(cover, order, 60'000 + t);
        const auto res = complete_good(cover, g, 1.0, kInf, 70'000 + t);
        if (res.status != CompleteStatus::ok)
            return {false, "completion failed at run " + std::to_string(t)};
        if (!res.coloring.is_total() || !is_proper(cover, res.coloring) ||
            !res.coloring.completes(g))
            return {false, "completion output invalid at run " + std::to_string(t)};
    }

    const double target = 2.0 * std::exp(1.0) / 25.0;
    std::vector<double> products;
    for (int delta : {50, 100, 200}) {
        const auto params = derive_params(delta, delta, 0.5, 1);
        products.push_back(lll_condition(params.ell, params.d).product);
    }
    if (!(products[0] > products[1] && products[1] > products[2]))
        return {false, "LLL products not decreasing"};
    if (std::fabs(products.back() - target) > 0.05)
        return {false, "LLL product at Delta=200 not within 0.05 of 2e/25"};
    std::ostringstream detail;
    detail << "1000 completions proper; LLL products " << products[0] << " > " << products[1]
           << " > " << products[2] << " -> 2e/25 = " << target;
    return {true, detail.str()};
}

// 11. Structural monotonicity: |gcol(U + x)| <= |gcol(U)| and
//     gcol(empty) = pcol(G) on 100 random (graph, cover, U, x) instances.
Outcome criterion_monotonicity() {
    Rng rng(321);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(4)); // 2..5
        const std::uint64_t mask = rng.below(std::uint64_t{1} << (n * (n - 1) / 2));
        Graph g = path_graph(n);
        for_each_labeled_graph(n, [&](const Graph& candidate, std::uint64_t m) {
            if (m == mask) g = candidate;
        });
        const int q = 2 + static_cast<int>(rng.below(2));
        const DPCover cover = rng.below(2) ? canonical_cover(g, q)
                                           : random_cover(g, q, 40'000 + trial);
        std::vector<int> u;
        for (int v = 0; v < n; ++v)
            if (rng.below(2)) u.push_back(v);
        if (static_cast<int>(u.size()) == n) u.pop_back();
        std::vector<int> outside;
        for (int v = 0; v < n; ++v)
            if (std::find(u.begin(), u.end(), v) == u.end()) outside.push_back(v);
        const int x = outside[rng.below(outside.size())];
        auto u_plus = u;
        u_plus.push_back(x);

        const double ell = static_cast<double>(rng.below(4));
        const double d = rng.below(2) ? kInf : static_cast<double>(rng.below(2));

        const mpz_class with_x = count_good_colorings(cover, u_plus, ell, d).value;
        const mpz_class without = count_good_colorings(cover, u, ell, d).value;
        if (with_x > without)
            return {false, "|gcol(U+x)| > |gcol(U)| at trial " + std::to_string(trial)};

        const mpz_class empty_u = count_good_colorings(cover, {}, ell, d).value;
        const mpz_class pcol = count_partial_colorings(cover, all_vertices(g)).value;
        if (empty_u != pcol)
            return {false, "gcol(empty) != pcol(G) at trial " + std::to_string(trial)};
    }
    return {true, "100 instances: containment and gcol(empty) = pcol(G), exact"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"partial-coloring bound on the triangle-free corpus", criterion_partial_bound},
        {"main bound spot-check on Petersen", criterion_main_bound_petersen},
        {"bipartite baseline", criterion_bipartite_baseline},
        {"independent-set chain", criterion_independent_chain},
        {"random-cover expectation", criterion_random_cover_expectation},
        {"coupon oracle equivalence", criterion_coupon_oracle},
        {"negative correlation", criterion_negative_correlation},
        {"pairing uniformity", criterion_pairing_uniformity},
        {"Markov-mechanism ceiling", criterion_markov_mechanism},
        {"completion correctness and LLL product", criterion_completion},
        {"structural monotonicity of good colorings", criterion_monotonicity},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, "exception"};
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const auto seconds = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
                  << criteria[i].first << " (" << outcome.detail << ") [" << seconds << "s]\n";
        if (!outcome.pass) ++failures;
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " criteria passed\n";
    return 0;
}
