#include "gcount/graph.hpp"

#include <algorithm>
#include <queue>

namespace gcount {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw invalid_parameter_error("vertex count must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw vertex_range_error("edge endpoint out of range: (" + std::to_string(u) +
                                     "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw loop_edge_error("loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw duplicate_edge_error("duplicate edge in edge list");
    return from_sorted_edges_unchecked(n, std::move(edges));
}

Graph Graph::from_sorted_edges_unchecked(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.build_adjacency();
    return g;
}

void Graph::build_adjacency() {
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

// Sorted-neighbor-list intersection per edge.
bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        const auto& a = g.neighbors(u);
        const auto& b = g.neighbors(v);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            if (a[i] < b[j]) ++i; else ++j;
        }
    }
    return true;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    std::queue<int> bfs;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        bfs.push(s);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int u : g.neighbors(v)) {
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    bfs.push(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
        }
    }
    return visited == g.vertex_count();
}

bool is_regular(const Graph& g, int degree) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != degree) return false;
    return true;
}

std::vector<int> second_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw vertex_range_error("second_neighborhood: vertex out of range");
    std::vector<char> in(g.vertex_count(), 0);
    in[v] = 1;
    for (int u : g.neighbors(v)) {
        in[u] = 1;
        for (int w : g.neighbors(u)) in[w] = 1;
    }
    std::vector<int> out;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (in[x]) out.push_back(x);
    return out;
}

Graph cycle_graph(int n) {
    if (n < 3) throw invalid_parameter_error("cycle requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph::from_edge_list(n, e);
}

Graph path_graph(int n) {
    if (n < 1) throw invalid_parameter_error("path requires n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph complete_graph(int k) {
    if (k < 1) throw invalid_parameter_error("complete requires k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(k, e);
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw invalid_parameter_error("complete_bipartite requires a, b >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edge_list(a + b, e);
}

Graph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);      // outer cycle
        e.emplace_back(i, i + 5);            // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return Graph::from_edge_list(10, e);
}

Graph clique_union(int t, int k) {
    if (t < 1 || k < 1) throw invalid_parameter_error("clique_union requires t, k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int c = 0; c < t; ++c)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) e.emplace_back(c * k + i, c * k + j);
    return Graph::from_edge_list(t * k, e);
}

Graph named_graph(const std::string& spec) {
    std::string name = spec;
    std::vector<long> params;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t comma = rest.find(',', pos);
            std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
            try {
                params.push_back(std::stol(tok));
            } catch (const std::exception&) {
                throw invalid_parameter_error("named_graph: bad parameter '" + tok + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    auto want = [&](std::size_t count) {
        if (params.size() != count)
            throw invalid_parameter_error("named_graph: '" + name + "' expects " +
                                          std::to_string(count) + " parameter(s)");
    };
    if (name == "cycle") { want(1); return cycle_graph(static_cast<int>(params[0])); }
    if (name == "path") { want(1); return path_graph(static_cast<int>(params[0])); }
    if (name == "complete") { want(1); return complete_graph(static_cast<int>(params[0])); }
    if (name == "complete_bipartite") {
        want(2);
        return complete_bipartite_graph(static_cast<int>(params[0]), static_cast<int>(params[1]));
    }
    if (name == "star") { want(1); return star_graph(static_cast<int>(params[0])); }
    if (name == "petersen") { want(0); return petersen_graph(); }
    if (name == "clique_union") {
        want(2);
        return clique_union(static_cast<int>(params[0]), static_cast<int>(params[1]));
    }
    throw invalid_parameter_error("named_graph: unknown name '" + name + "'");
}

namespace detail {

void check_corpus_size(int n) {
    if (n < 1) throw invalid_parameter_error("corpus enumeration requires n >= 1");
    if (n > kMaxCorpusVertices)
        throw invalid_parameter_error("corpus enumeration capped at " +
                                      std::to_string(kMaxCorpusVertices) + " vertices");
}

std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

} // namespace detail

} // namespace gcount
