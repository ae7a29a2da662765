#include "gcount/coupon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gcount/graph.hpp"

namespace gcount {

std::vector<std::string> validate_instance(const CouponInstance& inst) {
    std::vector<std::string> out;
    if (inst.q < 1) out.push_back("q must be >= 1");
    if (inst.matchings.size() != inst.sizes.size())
        out.push_back("one matching per secondary set required");
    for (std::size_t i = 0; i < inst.sizes.size(); ++i) {
        const std::string where = "L_" + std::to_string(i + 1);
        if (inst.sizes[i] < 1) out.push_back(where + ": size must be >= 1");
        if (i >= inst.matchings.size()) continue;
        std::vector<char> seen_a(std::max(inst.q, 0), 0);
        std::vector<char> seen_b(std::max(inst.sizes[i], 0), 0);
        for (auto [a, b] : inst.matchings[i]) {
            if (a < 0 || a >= inst.q || b < 0 || b >= inst.sizes[i]) {
                out.push_back(where + ": matched element out of range");
                continue;
            }
            if (seen_a[a] || seen_b[b]) out.push_back(where + ": not a matching");
            seen_a[a] = 1;
            seen_b[b] = 1;
        }
    }
    return out;
}

namespace {

// hit_by[i][beta] = the alpha matched to beta in L_i, or -1.
std::vector<std::vector<int>> hit_table(const CouponInstance& inst) {
    std::vector<std::vector<int>> table(inst.sizes.size());
    for (std::size_t i = 0; i < inst.sizes.size(); ++i) {
        table[i].assign(inst.sizes[i], -1);
        for (auto [a, b] : inst.matchings[i]) table[i][b] = a;
    }
    return table;
}

// membership[alpha] = indices i with alpha matched into L_i.
std::vector<std::vector<int>> alpha_neighborhoods(const CouponInstance& inst) {
    std::vector<std::vector<int>> n_alpha(inst.q);
    for (std::size_t i = 0; i < inst.matchings.size(); ++i)
        for (auto [a, b] : inst.matchings[i]) n_alpha[a].push_back(static_cast<int>(i));
    return n_alpha;
}

} // namespace

CouponOutcome sample(const CouponInstance& inst, Rng& rng) {
    CouponOutcome out;
    out.survives.assign(inst.q, 1);
    out.degrees.assign(inst.q, 0);
    const auto hits = hit_table(inst);
    for (int i = 0; i < inst.k(); ++i) {
        // blank is encoded as sizes[i].
        const int choice = static_cast<int>(rng.below(static_cast<std::uint64_t>(inst.sizes[i]) + 1));
        if (choice == inst.sizes[i]) {
            // blank: contributes to deg' of every alpha matched into L_i.
            for (auto [a, b] : inst.matchings[i]) ++out.degrees[a];
        } else if (hits[i][choice] != -1) {
            out.survives[hits[i][choice]] = 0;
        }
    }
    out.survivor_count = 0;
    for (char s : out.survives) out.survivor_count += s;
    return out;
}

CouponOutcome sample(const CouponInstance& inst, std::uint64_t seed) {
    Rng rng(seed);
    return sample(inst, rng);
}

mpq_class exact_expected_survivors(const CouponInstance& inst) {
    const auto n_alpha = alpha_neighborhoods(inst);
    mpq_class total = 0;
    for (int a = 0; a < inst.q; ++a) {
        mpq_class prob = 1;
        for (int i : n_alpha[a])
            prob *= mpq_class(inst.sizes[i], inst.sizes[i] + 1);
        total += prob;
    }
    total.canonicalize();
    return total;
}

mpq_class rho(const CouponInstance& inst, int alpha) {
    if (alpha < 0 || alpha >= inst.q)
        throw invalid_parameter_error("rho: unknown element of L_0");
    const auto n_alpha = alpha_neighborhoods(inst);
    mpq_class total = 0;
    for (int i : n_alpha[alpha]) total += mpq_class(1, inst.sizes[i]);
    total.canonicalize();
    return total;
}

TailEstimates monte_carlo_tails(const CouponInstance& inst, double ell, double d,
                                std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw invalid_parameter_error("monte_carlo_tails: trials must be >= 1");
    std::uint64_t small_list = 0, high_degree = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::derived(seed, t);
        const auto outcome = sample(inst, rng);
        if (static_cast<double>(outcome.survivor_count) < ell) ++small_list;
        for (int a = 0; a < inst.q; ++a) {
            if (outcome.survives[a] && static_cast<double>(outcome.degrees[a]) > d) {
                ++high_degree;
                break;
            }
        }
    }
    auto finish = [trials](std::uint64_t count) {
        const double p = static_cast<double>(count) / static_cast<double>(trials);
        const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
        return std::make_pair(p, se);
    };
    const auto [pb, seb] = finish(small_list);
    const auto [pc, sec] = finish(high_degree);
    return {pb, seb, pc, sec, trials};
}

double jensen_lower_bound(int q, int k) {
    if (q < 1 || k < 0) throw invalid_parameter_error("jensen_lower_bound: need q >= 1, k >= 0");
    return static_cast<double>(q) * std::exp(-static_cast<double>(k) / static_cast<double>(q));
}

bool q_large_holds(int q, int delta, double eps) {
    if (q < 1 || delta < 0) throw invalid_parameter_error("q_large_holds: bad arguments");
    const double lhs = static_cast<double>(q) * std::exp(-static_cast<double>(delta) / q);
    return lhs >= std::pow(static_cast<double>(q), eps / 2.0);
}

CouponInstance random_instance(int q, int k, std::uint64_t seed) {
    if (q < 1 || k < 0) throw invalid_parameter_error("random_instance: need q >= 1, k >= 0");
    Rng rng(seed);
    CouponInstance inst;
    inst.q = q;
    inst.sizes.resize(k);
    inst.matchings.resize(k);
    std::vector<int> alphas(q), targets;
    for (int i = 0; i < k; ++i) {
        inst.sizes[i] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(q)));
        const int max_pairs = std::min(q, inst.sizes[i]);
        const int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_pairs) + 1));
        std::iota(alphas.begin(), alphas.end(), 0);
        rng.shuffle(alphas);
        targets.resize(inst.sizes[i]);
        std::iota(targets.begin(), targets.end(), 0);
        rng.shuffle(targets);
        std::vector<std::pair<int, int>> pairs;
        for (int p = 0; p < t; ++p) pairs.emplace_back(alphas[p], targets[p]);
        std::sort(pairs.begin(), pairs.end());
        inst.matchings[i] = std::move(pairs);
    }
    return inst;
}

} // namespace gcount
