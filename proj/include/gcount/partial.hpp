#ifndef GCOUNT_PARTIAL_HPP
#define GCOUNT_PARTIAL_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "gcount/cover.hpp"

namespace gcount {

inline constexpr int kBlank = -1;

// Partial map from vertices to list indices; kBlank marks an uncolored vertex.
struct PartialColoring {
    std::vector<int> color;

    static PartialColoring all_blank(int n) { return {std::vector<int>(n, kBlank)}; }

    int size() const { return static_cast<int>(color.size()); }
    bool is_blank(int v) const { return color[v] == kBlank; }
    bool is_total() const {
        for (int c : color)
            if (c == kBlank) return false;
        return true;
    }
    int blank_count() const {
        int k = 0;
        for (int c : color)
            if (c == kBlank) ++k;
        return k;
    }
    // Does f agree with g on every vertex g colors?
    bool completes(const PartialColoring& g) const {
        for (int v = 0; v < g.size(); ++v)
            if (g.color[v] != kBlank && color[v] != g.color[v]) return false;
        return true;
    }
    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;
};

// Image independent in H (no matched pair among assigned colors)?
bool is_proper(const DPCover& cover, const PartialColoring& f);

// L_f(v): indices of the colors in L(v) with no H-neighbor in the image of f.
std::vector<int> available_list(const DPCover& cover, const PartialColoring& f, int v);

// deg_f(alpha): H-neighbors of alpha sitting at blank vertices where they are
// still available.
int color_degree(const DPCover& cover, const PartialColoring& f, ColorId alpha);

enum class FlawKind { small_list, high_degree };

struct FlawReport {
    int vertex;
    FlawKind kind;
    // small_list: the offending list size. high_degree: the offending color
    // and its degree.
    int list_size = 0;
    ColorId color{-1, -1};
    int color_deg = 0;
};

// Does f have a flaw at v: v blank with |L_f(v)| < ell, or with some alpha in
// L_f(v) of deg_f(alpha) > d. Strict inequalities, exactly as stated; pass
// d = infinity to disable the degree flaw.
bool flawed_at(const DPCover& cover, const PartialColoring& f, int v, double ell, double d);

// All flawed vertices, each with its witness.
std::vector<FlawReport> flaw_set(const DPCover& cover, const PartialColoring& f, double ell,
                                 double d);

// No flaw at any vertex whose closed second neighborhood lies inside U.
bool is_good_on(const DPCover& cover, const PartialColoring& f, const std::vector<int>& U,
                double ell, double d);

// Observes each greedy step before the choice is made: the vertex and its
// incrementally maintained available list.
using GreedyStepHook = std::function<void(int vertex, const std::vector<int>& avail,
                                          const PartialColoring& f)>;

// Processes `order` (a permutation of V) assigning each vertex a uniform
// choice from L_f(x) + blank. Output is proper by construction.
PartialColoring greedy_partial_sampler(const DPCover& cover, const std::vector<int>& order,
                                       std::uint64_t seed, const GreedyStepHook& hook = nullptr);

// Symmetric quantitative local-lemma condition e*p*(D+1) <= 1 with
// p = 1/ell^2 and D = ceil(2*d*ceil(ell)).
struct LLLCheck {
    double p;
    long long D;
    double product;
    bool satisfied;
};

LLLCheck lll_condition(double ell, double d);

enum class CompleteStatus { ok, empty_list, max_rounds };

struct CompleteResult {
    CompleteStatus status;
    PartialColoring coloring;   // meaningful when status == ok
    std::uint64_t rounds = 0;   // resampling rounds performed
    int failed_vertex = -1;     // blank vertex with empty list, when relevant
    LLLCheck lll{0, 0, 0, false};
};

inline constexpr std::uint64_t kDefaultMaxRounds = 1'000'000;

// Completes a proper partial coloring g to a total proper coloring by
// resampling: every blank vertex gets a uniform color from L_g(v); while some
// matched pair among the new colors is realized, the lexicographically first
// violated pair has both endpoints redrawn. Deterministic given seed.
CompleteResult complete_good(const DPCover& cover, const PartialColoring& g, double ell, double d,
                             std::uint64_t seed, std::uint64_t max_rounds = kDefaultMaxRounds);

} // namespace gcount

#endif
