#ifndef GCOUNT_GRAPH_HPP
#define GCOUNT_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcount {

struct graph_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct loop_edge_error : graph_error {
    using graph_error::graph_error;
};
struct duplicate_edge_error : graph_error {
    using graph_error::graph_error;
};
struct vertex_range_error : graph_error {
    using graph_error::graph_error;
};
struct invalid_parameter_error : graph_error {
    using graph_error::graph_error;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// edges are stored lexicographically sorted with u < v, adjacency lists sorted.
class Graph {
public:
    Graph() = default;

    // Validates the input: rejects loops, duplicate edges and out-of-range
    // endpoints, each with its own error type.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

    // Caller guarantees edges are normalized (u < v), sorted, unique, in range.
    static Graph from_sorted_edges_unchecked(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    // Index of edge {u,v} in edges(), or -1.
    int edge_index(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;

    void build_adjacency();
};

int max_degree(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_connected(const Graph& g);
bool is_regular(const Graph& g, int degree);

// Closed second neighborhood N^2[v]: all vertices at distance <= 2, v included.
// Returned sorted.
std::vector<int> second_neighborhood(const Graph& g, int v);

// Named generators.
Graph cycle_graph(int n);                         // n >= 3
Graph path_graph(int n);                          // n >= 1
Graph complete_graph(int k);                      // k >= 1
Graph complete_bipartite_graph(int a, int b);     // a, b >= 1
Graph star_graph(int leaves);                     // K_{1,leaves}
Graph petersen_graph();
Graph clique_union(int t, int k);                 // t disjoint copies of K_k

// Parses "cycle:5", "path:4", "complete:3", "complete_bipartite:2,3",
// "star:4", "petersen", "clique_union:2,3".
Graph named_graph(const std::string& spec);

// Corpus enumeration is capped: beyond 7 vertices the labeled corpus is
// no longer desk-scale.
inline constexpr int kMaxCorpusVertices = 7;

namespace detail {
void check_corpus_size(int n);
std::vector<std::pair<int, int>> vertex_pairs(int n);
} // namespace detail

// Visits every labeled graph on exactly n vertices (2^C(n,2) of them), in
// increasing edge-mask order. The mask over detail::vertex_pairs(n) is passed
// along as a stable identifier.
template <class Visit>
void for_each_labeled_graph(int n, Visit&& visit) {
    detail::check_corpus_size(n);
    const auto pairs = detail::vertex_pairs(n);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) edges.push_back(pairs[b]);
        visit(Graph::from_sorted_edges_unchecked(n, edges), mask);
    }
}

// Labeled corpus on 1..n_max vertices.
template <class Visit>
void for_each_labeled_graph_up_to(int n_max, Visit&& visit) {
    detail::check_corpus_size(n_max);
    for (int n = 1; n <= n_max; ++n)
        for_each_labeled_graph(n, [&](const Graph& g, std::uint64_t mask) { visit(g, mask); });
}

} // namespace gcount

#endif
