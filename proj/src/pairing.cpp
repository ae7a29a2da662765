#include "gcount/pairing.hpp"

#include <algorithm>
#include <cmath>

#include "gcount/rng.hpp"

namespace gcount {

std::vector<std::pair<int, int>> Pairing::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < points(); ++x)
        if (x < mate[x]) out.emplace_back(x, mate[x]);
    return out;
}

Pairing sample_pairing(int n, int delta, std::uint64_t seed) {
    if (n < 1 || delta < 1) throw invalid_parameter_error("sample_pairing: need n, delta >= 1");
    if ((static_cast<long long>(n) * delta) % 2 != 0)
        throw invalid_parameter_error("sample_pairing: delta*n must be even");
    Pairing p;
    p.n = n;
    p.delta = delta;
    p.mate.assign(n * delta, -1);
    Rng rng(seed);
    std::vector<int> unmatched(p.points());
    for (int i = 0; i < p.points(); ++i) unmatched[i] = i;
    // unmatched stays sorted: the first element is the smallest free point.
    while (!unmatched.empty()) {
        const int x = unmatched.front();
        const std::uint64_t pick = 1 + rng.below(unmatched.size() - 1);
        const int y = unmatched[pick];
        p.mate[x] = y;
        p.mate[y] = x;
        unmatched.erase(unmatched.begin() + pick);
        unmatched.erase(unmatched.begin());
    }
    return p;
}

Pairing generator_algorithm1(int n, int delta, const std::vector<int>& f, std::uint64_t seed,
                             std::vector<Alg1Step>* steps) {
    if (n < 1 || delta < 1)
        throw invalid_parameter_error("generator_algorithm1: need n, delta >= 1");
    if ((static_cast<long long>(n) * delta) % 2 != 0)
        throw invalid_parameter_error("generator_algorithm1: delta*n must be even");
    if (static_cast<int>(f.size()) != n)
        throw invalid_parameter_error("generator_algorithm1: f must color every cell");
    int q = 0;
    for (int c : f) {
        if (c < 0) throw invalid_parameter_error("generator_algorithm1: f must be total");
        q = std::max(q, c + 1);
    }

    Pairing p;
    p.n = n;
    p.delta = delta;
    p.mate.assign(n * delta, -1);
    Rng rng(seed);

    const int points = p.points();
    std::vector<char> covered(points, 0);
    // classes[j] holds the uncovered points of color class j, kept sorted.
    std::vector<std::vector<int>> classes(q);
    for (int x = 0; x < points; ++x) classes[f[p.cell(x)]].push_back(x);
    int u_size = points;

    auto remove_point = [&](int x) {
        auto& cls = classes[f[p.cell(x)]];
        cls.erase(std::lower_bound(cls.begin(), cls.end(), x));
        covered[x] = 1;
        --u_size;
    };

    for (int round = 0; round < points / 2; ++round) {
        // Maximum class, lowest index on ties; x is its lowest point.
        int best = 0;
        for (int j = 1; j < q; ++j)
            if (classes[j].size() > classes[best].size()) best = j;
        const int x = classes[best].front();
        const int cmax_size = static_cast<int>(classes[best].size());

        // y uniform over U \ {x}.
        std::uint64_t pick = rng.below(static_cast<std::uint64_t>(u_size - 1));
        int y = -1;
        for (int cand = 0; cand < points; ++cand) {
            if (covered[cand] || cand == x) continue;
            if (pick == 0) {
                y = cand;
                break;
            }
            --pick;
        }
        if (steps) steps->push_back({cmax_size, u_size, f[p.cell(y)] == best});
        p.mate[x] = y;
        p.mate[y] = x;
        remove_point(x);
        remove_point(y);
    }
    return p;
}

MultiGraph project(const Pairing& p) {
    MultiGraph mg;
    mg.n = p.n;
    for (int x = 0; x < p.points(); ++x) {
        if (x < p.mate[x]) {
            int u = p.cell(x), v = p.cell(p.mate[x]);
            if (u > v) std::swap(u, v);
            mg.edges.emplace_back(u, v);
        }
    }
    std::sort(mg.edges.begin(), mg.edges.end());
    return mg;
}

bool has_loop(const MultiGraph& mg) {
    for (auto [u, v] : mg.edges)
        if (u == v) return true;
    return false;
}

bool is_simple(const MultiGraph& mg) {
    if (has_loop(mg)) return false;
    auto sorted = mg.edges;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Graph simplify(const MultiGraph& mg) {
    if (has_loop(mg)) throw invalid_parameter_error("simplify: multigraph has a loop");
    auto edges = mg.edges;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edge_list(mg.n, edges);
}

mpz_class count_multigraph_colorings(const MultiGraph& mg, int q, std::uint64_t work_limit) {
    if (has_loop(mg)) return 0;
    return count_colorings(simplify(mg), q, work_limit).value;
}

SimpleSampleResult sample_simple_triangle_free(int n, int delta, std::uint64_t seed,
                                               std::uint64_t max_attempts) {
    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        const Pairing p = sample_pairing(n, delta, seed + attempt);
        const MultiGraph mg = project(p);
        if (!is_simple(mg)) continue;
        Graph g = simplify(mg);
        if (!is_triangle_free(g)) continue;
        return {std::move(g), attempt + 1};
    }
    throw std::runtime_error("sample_simple_triangle_free: max attempts exhausted after " +
                             std::to_string(max_attempts));
}

ColoringEstimate estimate_expected_colorings(int n, int delta, int q, std::uint64_t trials,
                                             std::uint64_t seed, std::uint64_t work_limit) {
    if (trials < 1) throw invalid_parameter_error("estimate_expected_colorings: trials >= 1");
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Pairing p = sample_pairing(n, delta, seed + t);
        const mpz_class count = count_multigraph_colorings(project(p), q, work_limit);
        const double x = count.get_d();
        sum += x;
        sum_sq += x * x;
    }
    const double tn = static_cast<double>(trials);
    const double mean = sum / tn;
    const double variance = trials > 1 ? std::max(0.0, (sum_sq - tn * mean * mean) / (tn - 1.0)) : 0.0;
    const double std_error = std::sqrt(variance / tn);

    const double m = static_cast<double>(n) * delta / 2.0;
    const double log_ceiling = m * std::log1p(-1.0 / q) + std::log(static_cast<double>(n)) +
                               static_cast<double>(n) * std::log(static_cast<double>(q));
    const double ceiling = std::exp(log_ceiling);
    return {n, delta, q, trials, mean, std_error, ceiling, log_ceiling,
            ceiling > 0 ? mean / ceiling : 0.0};
}

} // namespace gcount
