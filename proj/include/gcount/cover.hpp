#ifndef GCOUNT_COVER_HPP
#define GCOUNT_COVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcount/graph.hpp"

namespace gcount {

// A color of the cover graph H, addressed as (underlying vertex, index within
// its list). Lists are disjoint by construction, so the partition invariant
// is structural.
struct ColorId {
    int vertex;
    int index;
    friend bool operator==(const ColorId&, const ColorId&) = default;
};

// Partial injection between the color indices of an edge's endpoints,
// oriented from the lower vertex id to the higher one. Pairs are kept
// sorted by the lower-side index.
using MatchingPairs = std::vector<std::pair<int, int>>;

// q-fold cover of a base graph: one list of `fold` colors per vertex and one
// matching per base edge. `matchings[e]` corresponds to `base.edges()[e]`.
// Plain data; validate_cover() checks the matching invariants.
struct DPCover {
    Graph base;
    int fold = 0;
    std::vector<MatchingPairs> matchings;

    int list_size() const { return fold; }
};

// Identity matching on every edge; proper H-colorings biject with proper
// q-colorings of the base graph.
DPCover canonical_cover(const Graph& g, int q);

// Cover induced by per-vertex color-name lists: indices i, j are matched
// across an edge exactly when the list entries carry equal names. All lists
// must have the same size and no repeated names within a list.
DPCover cover_from_lists(const Graph& g, const std::vector<std::vector<int>>& lists);

// Independent uniformly random perfect matching (a full permutation of the
// q indices) on every edge.
DPCover random_cover(const Graph& g, int q, std::uint64_t seed);

// Invariant check; returns human-readable violations (empty = valid).
std::vector<std::string> validate_cover(const DPCover& cover);

// Raw matching entry as it appears in external input; (u,v) need not be a
// base edge, which is one of the violations make_cover reports.
struct CoverEntry {
    int u = 0;
    int v = 0;
    MatchingPairs pairs;
};

// Builds a cover from raw entries, validating against the base graph.
// Violations are appended to *violations (if given); returns nullopt when
// any violation was found.
std::optional<DPCover> make_cover(const Graph& g, int q, const std::vector<CoverEntry>& entries,
                                  std::vector<std::string>* violations = nullptr);

} // namespace gcount

#endif
