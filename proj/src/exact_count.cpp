#include "gcount/exact_count.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gcount {

const char* to_string(CountMethod m) {
    return m == CountMethod::enumeration ? "enumeration" : "deletion-contraction";
}

namespace {

struct WorkGuard {
    std::uint64_t work = 0;
    std::uint64_t limit;
    explicit WorkGuard(std::uint64_t lim) : limit(lim) {}
    void step() {
        if (++work > limit) throw work_limit_error(work);
    }
};

mpz_class mpz_power(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// Does q^n stay within the enumeration budget?
bool enumeration_feasible(int n, int q, std::uint64_t limit) {
    if (q <= 1) return true;
    long double total = 1.0L;
    for (int i = 0; i < n; ++i) {
        total *= q;
        if (total > static_cast<long double>(limit)) return false;
    }
    return true;
}

// Per-vertex view of the cover's matchings: arcs[v] links v to each neighbor
// with the index map of the connecting matching.
struct CompiledCover {
    int n = 0;
    int q = 0;
    struct Arc {
        int to;
        std::vector<int> partner; // partner[i] = matched index at `to`, or -1
    };
    std::vector<std::vector<Arc>> arcs;
};

CompiledCover compile(const DPCover& cover) {
    CompiledCover cc;
    cc.n = cover.base.vertex_count();
    cc.q = cover.fold;
    cc.arcs.resize(cc.n);
    for (int e = 0; e < cover.base.edge_count(); ++e) {
        auto [a, b] = cover.base.edges()[e];
        std::vector<int> fwd(cc.q, -1), rev(cc.q, -1);
        for (auto [i, j] : cover.matchings[e]) {
            fwd[i] = j;
            rev[j] = i;
        }
        cc.arcs[a].push_back({b, std::move(fwd)});
        cc.arcs[b].push_back({a, std::move(rev)});
    }
    return cc;
}

bool conflicts(const CompiledCover& cc, const std::vector<int>& color, int v, int idx) {
    for (const auto& arc : cc.arcs[v]) {
        const int other = color[arc.to];
        if (other != kBlank && arc.partner[idx] == other) return true;
    }
    return false;
}

// Shared engine: vertices are processed in index order; can_blank/can_color
// describe the per-vertex domain, and accept filters complete assignments.
template <class Accept>
mpz_class enumerate_assignments(const CompiledCover& cc, const std::vector<char>& can_blank,
                                const std::vector<char>& can_color, const std::vector<int>& forced,
                                WorkGuard& guard, Accept&& accept) {
    std::vector<int> color(cc.n, kBlank);
    mpz_class total = 0;

    auto rec = [&](auto&& self, int v) -> void {
        guard.step();
        if (v == cc.n) {
            if (accept(color)) total += 1;
            return;
        }
        if (forced[v] != kBlank) {
            if (!conflicts(cc, color, v, forced[v])) {
                color[v] = forced[v];
                self(self, v + 1);
                color[v] = kBlank;
            }
            return;
        }
        if (can_blank[v]) self(self, v + 1);
        if (can_color[v]) {
            for (int i = 0; i < cc.q; ++i) {
                if (conflicts(cc, color, v, i)) continue;
                color[v] = i;
                self(self, v + 1);
                color[v] = kBlank;
            }
        }
    };
    rec(rec, 0);
    return total;
}

} // namespace

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> out(g.vertex_count());
    std::iota(out.begin(), out.end(), 0);
    return out;
}

double log_mpz(const mpz_class& value) {
    if (value <= 0) throw invalid_parameter_error("log_mpz: value must be positive");
    signed long exp2;
    const double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

CountResult count_colorings_enumeration(const Graph& g, int q, std::uint64_t work_limit) {
    if (q < 0) throw invalid_parameter_error("count_colorings: q must be nonnegative");
    WorkGuard guard(work_limit);
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    mpz_class total = 0;
    auto rec = [&](auto&& self, int v) -> void {
        guard.step();
        if (v == n) {
            total += 1;
            return;
        }
        for (int c = 0; c < q; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v)) {
                if (u < v && color[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[v] = c;
            self(self, v + 1);
            color[v] = -1;
        }
    };
    rec(rec, 0);
    return {total, CountMethod::enumeration, guard.work};
}

namespace {

// c(G,q) = c(G-e,q) - c(G/e,q); parallel edges collapse, loops kill everything.
mpz_class dc_recurse(int n, std::vector<std::pair<int, int>> edges, int q, WorkGuard& guard) {
    guard.step();
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [u, v] : edges)
        if (u == v) return 0;
    if (edges.empty()) return mpz_power(static_cast<unsigned long>(q),
                                        static_cast<unsigned long>(n));
    const auto [a, b] = edges.back();
    auto deleted = edges;
    deleted.pop_back();
    mpz_class result = dc_recurse(n, deleted, q, guard);

    // Contract b into a; vertices above b shift down.
    std::vector<std::pair<int, int>> contracted;
    contracted.reserve(deleted.size());
    auto remap = [&](int x) { return x == b ? a : (x > b ? x - 1 : x); };
    for (auto [u, v] : deleted) {
        int x = remap(u), y = remap(v);
        if (x > y) std::swap(x, y);
        contracted.emplace_back(x, y);
    }
    result -= dc_recurse(n - 1, std::move(contracted), q, guard);
    return result;
}

} // namespace

CountResult count_colorings_deletion_contraction(const Graph& g, int q,
                                                 std::uint64_t work_limit) {
    if (q < 0) throw invalid_parameter_error("count_colorings: q must be nonnegative");
    WorkGuard guard(work_limit);
    mpz_class value =
        dc_recurse(g.vertex_count(), g.edges(), q, guard);
    return {std::move(value), CountMethod::deletion_contraction, guard.work};
}

CountResult count_colorings(const Graph& g, int q, std::uint64_t work_limit) {
    if (enumeration_feasible(g.vertex_count(), q, work_limit))
        return count_colorings_enumeration(g, q, work_limit);
    return count_colorings_deletion_contraction(g, q, work_limit);
}

CountResult count_H_colorings(const DPCover& cover, std::uint64_t work_limit) {
    WorkGuard guard(work_limit);
    const auto cc = compile(cover);
    std::vector<char> can_blank(cc.n, 0), can_color(cc.n, 1);
    std::vector<int> forced(cc.n, kBlank);
    mpz_class value = enumerate_assignments(cc, can_blank, can_color, forced, guard,
                                            [](const std::vector<int>&) { return true; });
    return {std::move(value), CountMethod::enumeration, guard.work};
}

CountResult count_partial_colorings(const DPCover& cover, const std::vector<int>& U,
                                    std::uint64_t work_limit) {
    WorkGuard guard(work_limit);
    const auto cc = compile(cover);
    std::vector<char> can_blank(cc.n, 1), can_color(cc.n, 0);
    for (int v : U) {
        if (v < 0 || v >= cc.n) throw vertex_range_error("count_partial_colorings: U out of range");
        can_color[v] = 1;
    }
    std::vector<int> forced(cc.n, kBlank);
    mpz_class value = enumerate_assignments(cc, can_blank, can_color, forced, guard,
                                            [](const std::vector<int>&) { return true; });
    return {std::move(value), CountMethod::enumeration, guard.work};
}

CountResult count_good_colorings(const DPCover& cover, const std::vector<int>& U, double ell,
                                 double d, std::uint64_t work_limit) {
    if (ell < 0.0 || d < 0.0)
        throw invalid_parameter_error("count_good_colorings: thresholds must be nonnegative");
    WorkGuard guard(work_limit);
    const auto cc = compile(cover);
    std::vector<char> in_u(cc.n, 0);
    for (int v : U) {
        if (v < 0 || v >= cc.n) throw vertex_range_error("count_good_colorings: U out of range");
        in_u[v] = 1;
    }
    // Goodness on U only constrains vertices whose closed second neighborhood
    // lies inside U.
    std::vector<int> scoped;
    for (int v = 0; v < cc.n; ++v) {
        bool inside = true;
        for (int w : second_neighborhood(cover.base, v)) {
            if (!in_u[w]) {
                inside = false;
                break;
            }
        }
        if (inside) scoped.push_back(v);
    }
    std::vector<char> can_blank(cc.n, 1), can_color(cc.n, 1);
    std::vector<int> forced(cc.n, kBlank);
    PartialColoring f = PartialColoring::all_blank(cc.n);
    auto accept = [&](const std::vector<int>& color) {
        f.color = color;
        for (int v : scoped)
            if (flawed_at(cover, f, v, ell, d)) return false;
        return true;
    };
    mpz_class value = enumerate_assignments(cc, can_blank, can_color, forced, guard, accept);
    return {std::move(value), CountMethod::enumeration, guard.work};
}

CountResult count_completions(const DPCover& cover, const PartialColoring& g,
                              std::uint64_t work_limit) {
    if (g.size() != cover.base.vertex_count())
        throw invalid_parameter_error("count_completions: coloring size mismatch");
    if (!is_proper(cover, g))
        throw invalid_parameter_error("count_completions: g must be proper");
    WorkGuard guard(work_limit);
    const auto cc = compile(cover);
    std::vector<char> can_blank(cc.n, 0), can_color(cc.n, 1);
    std::vector<int> forced(cc.n, kBlank);
    for (int v = 0; v < cc.n; ++v)
        if (g.color[v] != kBlank) forced[v] = g.color[v];
    mpz_class value = enumerate_assignments(cc, can_blank, can_color, forced, guard,
                                            [](const std::vector<int>&) { return true; });
    return {std::move(value), CountMethod::enumeration, guard.work};
}

CountResult count_independent_sets(const Graph& g, std::uint64_t work_limit) {
    WorkGuard guard(work_limit);
    const int n = g.vertex_count();
    std::vector<char> chosen(n, 0);
    mpz_class total = 0;
    auto rec = [&](auto&& self, int v) -> void {
        guard.step();
        if (v == n) {
            total += 1;
            return;
        }
        self(self, v + 1); // v excluded
        for (int u : g.neighbors(v)) {
            if (u < v && chosen[u]) return;
        }
        chosen[v] = 1;
        self(self, v + 1);
        chosen[v] = 0;
    };
    rec(rec, 0);
    return {std::move(total), CountMethod::enumeration, guard.work};
}

} // namespace gcount
