#include "gcount/partial.hpp"

#include <algorithm>
#include <cmath>

#include "gcount/rng.hpp"

namespace gcount {

namespace {

// Partner of the color with index `idx` at `from` across edge e, or -1.
int matched_partner(const DPCover& cover, int e, int from, int idx) {
    auto [a, b] = cover.base.edges()[e];
    for (auto [i, j] : cover.matchings[e]) {
        if (from == a && i == idx) return j;
        if (from == b && j == idx) return i;
    }
    return -1;
}

bool color_available(const DPCover& cover, const PartialColoring& f, int v, int idx) {
    for (int u : cover.base.neighbors(v)) {
        if (f.color[u] == kBlank) continue;
        const int e = cover.base.edge_index(u, v);
        if (matched_partner(cover, e, u, f.color[u]) == idx) return false;
    }
    return true;
}

bool has_flaw_at(const DPCover& cover, const PartialColoring& f, int v, double ell, double d,
                 FlawReport* report) {
    if (f.color[v] != kBlank) return false;
    const auto avail = available_list(cover, f, v);
    if (static_cast<double>(avail.size()) < ell) {
        if (report)
            *report = {v, FlawKind::small_list, static_cast<int>(avail.size()), {-1, -1}, 0};
        return true;
    }
    for (int idx : avail) {
        const int deg = color_degree(cover, f, {v, idx});
        if (static_cast<double>(deg) > d) {
            if (report)
                *report = {v, FlawKind::high_degree, static_cast<int>(avail.size()), {v, idx}, deg};
            return true;
        }
    }
    return false;
}

} // namespace

bool flawed_at(const DPCover& cover, const PartialColoring& f, int v, double ell, double d) {
    return has_flaw_at(cover, f, v, ell, d, nullptr);
}

bool is_proper(const DPCover& cover, const PartialColoring& f) {
    for (int e = 0; e < cover.base.edge_count(); ++e) {
        auto [a, b] = cover.base.edges()[e];
        if (f.color[a] == kBlank || f.color[b] == kBlank) continue;
        if (matched_partner(cover, e, a, f.color[a]) == f.color[b]) return false;
    }
    return true;
}

std::vector<int> available_list(const DPCover& cover, const PartialColoring& f, int v) {
    std::vector<int> out;
    for (int i = 0; i < cover.fold; ++i)
        if (color_available(cover, f, v, i)) out.push_back(i);
    return out;
}

int color_degree(const DPCover& cover, const PartialColoring& f, ColorId alpha) {
    int deg = 0;
    for (int u : cover.base.neighbors(alpha.vertex)) {
        if (f.color[u] != kBlank) continue;
        const int e = cover.base.edge_index(alpha.vertex, u);
        const int partner = matched_partner(cover, e, alpha.vertex, alpha.index);
        if (partner == -1) continue;
        if (color_available(cover, f, u, partner)) ++deg;
    }
    return deg;
}

std::vector<FlawReport> flaw_set(const DPCover& cover, const PartialColoring& f, double ell,
                                 double d) {
    std::vector<FlawReport> out;
    for (int v = 0; v < cover.base.vertex_count(); ++v) {
        FlawReport report;
        if (has_flaw_at(cover, f, v, ell, d, &report)) out.push_back(report);
    }
    return out;
}

bool is_good_on(const DPCover& cover, const PartialColoring& f, const std::vector<int>& U,
                double ell, double d) {
    std::vector<char> in_u(cover.base.vertex_count(), 0);
    for (int x : U) in_u[x] = 1;
    for (int v = 0; v < cover.base.vertex_count(); ++v) {
        bool scoped = true;
        for (int w : second_neighborhood(cover.base, v)) {
            if (!in_u[w]) {
                scoped = false;
                break;
            }
        }
        if (scoped && has_flaw_at(cover, f, v, ell, d, nullptr)) return false;
    }
    return true;
}

PartialColoring greedy_partial_sampler(const DPCover& cover, const std::vector<int>& order,
                                       std::uint64_t seed, const GreedyStepHook& hook) {
    const int n = cover.base.vertex_count();
    {
        std::vector<char> seen(n, 0);
        if (static_cast<int>(order.size()) != n)
            throw invalid_parameter_error("greedy_partial_sampler: order must be a permutation");
        for (int v : order) {
            if (v < 0 || v >= n || seen[v])
                throw invalid_parameter_error("greedy_partial_sampler: order must be a permutation");
            seen[v] = 1;
        }
    }
    Rng rng(seed);
    auto f = PartialColoring::all_blank(n);
    // Incrementally maintained availability; removing a color's matched
    // partners when it gets used keeps every avail[v] equal to L_f(v).
    std::vector<std::vector<char>> avail(n, std::vector<char>(cover.fold, 1));
    std::vector<int> list;
    for (int x : order) {
        list.clear();
        for (int i = 0; i < cover.fold; ++i)
            if (avail[x][i]) list.push_back(i);
        if (hook) hook(x, list, f);
        const std::uint64_t pickIdx = rng.below(list.size() + 1);
        if (pickIdx == list.size()) continue; // blank
        const int chosen = list[pickIdx];
        f.color[x] = chosen;
        for (int u : cover.base.neighbors(x)) {
            const int e = cover.base.edge_index(x, u);
            const int partner = matched_partner(cover, e, x, chosen);
            if (partner != -1) avail[u][partner] = 0;
        }
    }
    return f;
}

LLLCheck lll_condition(double ell, double d) {
    if (ell <= 0.0) throw invalid_parameter_error("lll_condition: ell must be positive");
    if (d < 0.0) throw invalid_parameter_error("lll_condition: d must be nonnegative");
    LLLCheck check;
    check.p = 1.0 / (ell * ell);
    const double ell_up = std::ceil(ell);
    check.D = static_cast<long long>(std::ceil(2.0 * d * ell_up));
    check.product = std::exp(1.0) * check.p * static_cast<double>(check.D + 1);
    check.satisfied = check.product <= 1.0;
    return check;
}

CompleteResult complete_good(const DPCover& cover, const PartialColoring& g, double ell, double d,
                             std::uint64_t seed, std::uint64_t max_rounds) {
    const int n = cover.base.vertex_count();
    if (g.size() != n) throw invalid_parameter_error("complete_good: coloring size mismatch");
    if (!is_proper(cover, g)) throw invalid_parameter_error("complete_good: g must be proper");

    CompleteResult res;
    res.coloring = g;
    if (ell > 0.0 && d >= 0.0) res.lll = lll_condition(ell, d);
    if (g.is_total()) {
        res.status = CompleteStatus::ok;
        return res;
    }

    std::vector<std::vector<int>> lists(n);
    for (int v = 0; v < n; ++v) {
        if (g.color[v] != kBlank) continue;
        lists[v] = available_list(cover, g, v);
        if (lists[v].empty()) {
            res.status = CompleteStatus::empty_list;
            res.failed_vertex = v;
            return res;
        }
    }

    // Matched pairs whose endpoints are both blank and both still available:
    // the only conflicts a random completion can realize. Lexicographic order
    // by (edge, lower-side index).
    struct Dangerous {
        int a, b, i, j;
    };
    std::vector<Dangerous> dangerous;
    for (int e = 0; e < cover.base.edge_count(); ++e) {
        auto [a, b] = cover.base.edges()[e];
        if (g.color[a] != kBlank || g.color[b] != kBlank) continue;
        for (auto [i, j] : cover.matchings[e])
            if (std::binary_search(lists[a].begin(), lists[a].end(), i) &&
                std::binary_search(lists[b].begin(), lists[b].end(), j))
                dangerous.push_back({a, b, i, j});
    }

    Rng rng(seed);
    auto draw = [&](int v) { return lists[v][rng.below(lists[v].size())]; };
    PartialColoring f = g;
    for (int v = 0; v < n; ++v)
        if (g.color[v] == kBlank) f.color[v] = draw(v);

    for (;;) {
        const Dangerous* violated = nullptr;
        for (const auto& pair : dangerous) {
            if (f.color[pair.a] == pair.i && f.color[pair.b] == pair.j) {
                violated = &pair;
                break;
            }
        }
        if (!violated) {
            res.status = CompleteStatus::ok;
            res.coloring = f;
            return res;
        }
        if (res.rounds >= max_rounds) {
            res.status = CompleteStatus::max_rounds;
            return res;
        }
        ++res.rounds;
        f.color[violated->a] = draw(violated->a);
        f.color[violated->b] = draw(violated->b);
    }
}

} // namespace gcount
