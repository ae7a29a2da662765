#ifndef GCOUNT_IO_HPP
#define GCOUNT_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcount/coupon.hpp"
#include "gcount/cover.hpp"
#include "gcount/graph.hpp"
#include "gcount/partial.hpp"

namespace gcount {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list text format: first line "n m", then m lines "u v" (0-based);
// '#' starts a comment.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);

// graph6, bit-exact per the format specification (the optional
// ">>graph6<<" header is accepted).
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);
std::vector<Graph> load_graph6_file(const std::string& path);

// Dispatch on extension: ".g6" files may hold many graphs, anything else is
// read as a single edge list.
std::vector<Graph> load_graphs(const std::string& path);

// Cover serialization: {n, q, edges: [{u, v, matching: [[i,j],...]}]}.
// Normalized (edges sorted lower-first, matchings sorted) and lossless.
nlohmann::json cover_to_json(const DPCover& cover);
DPCover cover_from_json(const nlohmann::json& j);

// Partial coloring: JSON map vertex -> color index or null (null = blank).
nlohmann::json partial_to_json(const PartialColoring& f);
PartialColoring partial_from_json(const nlohmann::json& j, int n);

// Coupon instance: {q, sizes: [...], matchings: [[[alpha, beta],...],...]}.
nlohmann::json instance_to_json(const CouponInstance& inst);
CouponInstance instance_from_json(const nlohmann::json& j);

} // namespace gcount

#endif
