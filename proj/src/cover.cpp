#include "gcount/cover.hpp"

#include <algorithm>
#include <numeric>

#include "gcount/rng.hpp"

namespace gcount {

DPCover canonical_cover(const Graph& g, int q) {
    if (q < 1) throw invalid_parameter_error("canonical_cover: q must be >= 1");
    DPCover cover;
    cover.base = g;
    cover.fold = q;
    MatchingPairs identity;
    for (int i = 0; i < q; ++i) identity.emplace_back(i, i);
    cover.matchings.assign(g.edge_count(), identity);
    return cover;
}

DPCover cover_from_lists(const Graph& g, const std::vector<std::vector<int>>& lists) {
    if (static_cast<int>(lists.size()) != g.vertex_count())
        throw invalid_parameter_error("cover_from_lists: one list per vertex required");
    if (lists.empty()) throw invalid_parameter_error("cover_from_lists: empty graph");
    const std::size_t q = lists[0].size();
    if (q == 0) throw invalid_parameter_error("cover_from_lists: lists must be non-empty");
    for (const auto& list : lists) {
        if (list.size() != q)
            throw invalid_parameter_error("cover_from_lists: lists must all have the same size");
        auto sorted = list;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw invalid_parameter_error("cover_from_lists: repeated color name in a list");
    }
    DPCover cover;
    cover.base = g;
    cover.fold = static_cast<int>(q);
    cover.matchings.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        MatchingPairs pairs;
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j)
                if (lists[u][i] == lists[v][j])
                    pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        cover.matchings[e] = std::move(pairs);
    }
    return cover;
}

DPCover random_cover(const Graph& g, int q, std::uint64_t seed) {
    if (q < 1) throw invalid_parameter_error("random_cover: q must be >= 1");
    DPCover cover;
    cover.base = g;
    cover.fold = q;
    cover.matchings.resize(g.edge_count());
    Rng rng(seed);
    std::vector<int> perm(q);
    for (int e = 0; e < g.edge_count(); ++e) {
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        MatchingPairs pairs;
        for (int i = 0; i < q; ++i) pairs.emplace_back(i, perm[i]);
        cover.matchings[e] = std::move(pairs);
    }
    return cover;
}

namespace {

void check_matching(const MatchingPairs& pairs, int q, const std::string& where,
                    std::vector<std::string>& out) {
    std::vector<char> seen_lo(q, 0), seen_hi(q, 0);
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= q || j < 0 || j >= q) {
            out.push_back(where + ": color index out of range");
            continue;
        }
        if (seen_lo[i] || seen_hi[j]) out.push_back(where + ": not a matching");
        seen_lo[i] = 1;
        seen_hi[j] = 1;
    }
}

} // namespace

std::vector<std::string> validate_cover(const DPCover& cover) {
    std::vector<std::string> out;
    if (cover.fold < 1) {
        out.push_back("cover is not q-fold: q = " + std::to_string(cover.fold));
        return out;
    }
    if (cover.matchings.size() != static_cast<std::size_t>(cover.base.edge_count()))
        out.push_back("matching count differs from edge count");
    const std::size_t limit = std::min(cover.matchings.size(),
                                       static_cast<std::size_t>(cover.base.edge_count()));
    for (std::size_t e = 0; e < limit; ++e) {
        auto [u, v] = cover.base.edges()[e];
        check_matching(cover.matchings[e], cover.fold,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) + ")", out);
    }
    return out;
}

std::optional<DPCover> make_cover(const Graph& g, int q, const std::vector<CoverEntry>& entries,
                                  std::vector<std::string>* violations) {
    std::vector<std::string> local;
    auto& out = violations ? *violations : local;
    const std::size_t before = out.size();
    if (q < 1) out.push_back("cover is not q-fold: q = " + std::to_string(q));

    std::vector<MatchingPairs> matchings(g.edge_count());
    std::vector<char> filled(g.edge_count(), 0);
    for (const auto& entry : entries) {
        const std::string where =
            "edge (" + std::to_string(entry.u) + "," + std::to_string(entry.v) + ")";
        if (entry.u < 0 || entry.u >= g.vertex_count() || entry.v < 0 ||
            entry.v >= g.vertex_count()) {
            out.push_back(where + ": endpoint out of range");
            continue;
        }
        const int e = g.edge_index(entry.u, entry.v);
        if (e < 0) {
            out.push_back(where + ": matching support outside E(G)");
            continue;
        }
        if (filled[e]) {
            out.push_back(where + ": duplicate matching entry");
            continue;
        }
        filled[e] = 1;
        MatchingPairs pairs = entry.pairs;
        // Entries may be given from either endpoint; normalize to lower-first.
        if (entry.u > entry.v)
            for (auto& p : pairs) std::swap(p.first, p.second);
        std::sort(pairs.begin(), pairs.end());
        if (q >= 1) check_matching(pairs, q, where, out);
        matchings[e] = std::move(pairs);
    }
    if (out.size() != before) return std::nullopt;
    DPCover cover;
    cover.base = g;
    cover.fold = q;
    cover.matchings = std::move(matchings);
    return cover;
}

} // namespace gcount
