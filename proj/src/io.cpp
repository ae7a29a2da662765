#include "gcount/io.hpp"

#include <fstream>
#include <sstream>

namespace gcount {

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    return in;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ss(strip_comment(line));
        if (n < 0) {
            if (ss >> n >> m) continue;
            ss.clear();
            std::string leftover;
            if (ss >> leftover) throw io_error("edge list: bad header line");
            continue; // blank/comment line before header
        }
        long long u, v;
        if (ss >> u >> v) {
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        } else {
            ss.clear();
            std::string leftover;
            if (ss >> leftover) throw io_error("edge list: bad edge line");
        }
    }
    if (n < 0) throw io_error("edge list: missing header line");
    if (static_cast<long long>(edges.size()) != m)
        throw io_error("edge list: header announces " + std::to_string(m) + " edges, found " +
                       std::to_string(edges.size()));
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_edge_list(const std::string& path) {
    auto in = open_input(path);
    return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

namespace {

constexpr int kG6Bias = 63;

int g6_read_n(const std::string& s, std::size_t& pos) {
    if (pos >= s.size()) throw io_error("graph6: truncated size field");
    int c = s[pos] - kG6Bias;
    if (c < 0 || c > 63) throw io_error("graph6: invalid byte in size field");
    if (c < 63) {
        ++pos;
        return c;
    }
    // 126 prefix: 18-bit size in the next three bytes.
    if (pos + 3 >= s.size()) throw io_error("graph6: truncated size field");
    if (s[pos + 1] - kG6Bias == 63) throw io_error("graph6: graphs beyond 2^18 vertices unsupported");
    int n = 0;
    for (int i = 1; i <= 3; ++i) {
        const int digit = s[pos + i] - kG6Bias;
        if (digit < 0 || digit > 63) throw io_error("graph6: invalid byte in size field");
        n = (n << 6) | digit;
    }
    pos += 4;
    return n;
}

void g6_write_n(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Bias));
        return;
    }
    if (n > 258047) throw io_error("graph6: graphs beyond 258047 vertices unsupported");
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Bias));
    out.push_back(static_cast<char>((n & 63) + kG6Bias));
}

} // namespace

Graph parse_graph6(const std::string& raw) {
    std::string line = raw;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw io_error("graph6: empty line");

    std::size_t pos = 0;
    const int n = g6_read_n(line, pos);
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(line.size()) - static_cast<long long>(pos) != bytes)
        throw io_error("graph6: wrong payload length");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int c = line[pos + bit / 6] - kG6Bias;
            if (c < 0 || c > 63) throw io_error("graph6: invalid payload byte");
            if (c >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    g6_write_n(out, n);
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::string payload((bits + 5) / 6, static_cast<char>(kG6Bias));
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j)) payload[bit / 6] += static_cast<char>(1 << (5 - bit % 6));
        }
    }
    return out + payload;
}

std::vector<Graph> load_graph6_file(const std::string& path) {
    auto in = open_input(path);
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

std::vector<Graph> load_graphs(const std::string& path) {
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") return load_graph6_file(path);
    return {load_edge_list(path)};
}

nlohmann::json cover_to_json(const DPCover& cover) {
    nlohmann::json edges = nlohmann::json::array();
    for (int e = 0; e < cover.base.edge_count(); ++e) {
        auto [u, v] = cover.base.edges()[e];
        nlohmann::json matching = nlohmann::json::array();
        for (auto [i, j] : cover.matchings[e]) matching.push_back({i, j});
        edges.push_back({{"u", u}, {"v", v}, {"matching", std::move(matching)}});
    }
    return {{"n", cover.base.vertex_count()}, {"q", cover.fold}, {"edges", std::move(edges)}};
}

DPCover cover_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        const int q = j.at("q").get<int>();
        std::vector<std::pair<int, int>> edge_pairs;
        std::vector<CoverEntry> entries;
        for (const auto& e : j.at("edges")) {
            CoverEntry entry;
            entry.u = e.at("u").get<int>();
            entry.v = e.at("v").get<int>();
            for (const auto& p : e.at("matching"))
                entry.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
            edge_pairs.emplace_back(entry.u, entry.v);
            entries.push_back(std::move(entry));
        }
        const Graph base = Graph::from_edge_list(n, edge_pairs);
        std::vector<std::string> violations;
        auto cover = make_cover(base, q, entries, &violations);
        if (!cover) {
            std::string msg = "cover JSON invalid:";
            for (const auto& v : violations) msg += " " + v + ";";
            throw io_error(msg);
        }
        return *cover;
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("cover JSON malformed: ") + e.what());
    }
}

nlohmann::json partial_to_json(const PartialColoring& f) {
    nlohmann::json j = nlohmann::json::object();
    for (int v = 0; v < f.size(); ++v) {
        if (f.color[v] == kBlank)
            j[std::to_string(v)] = nullptr;
        else
            j[std::to_string(v)] = f.color[v];
    }
    return j;
}

PartialColoring partial_from_json(const nlohmann::json& j, int n) {
    auto f = PartialColoring::all_blank(n);
    try {
        for (const auto& [key, value] : j.items()) {
            const int v = std::stoi(key);
            if (v < 0 || v >= n) throw io_error("partial coloring: vertex out of range: " + key);
            if (!value.is_null()) f.color[v] = value.get<int>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("partial coloring JSON malformed: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw io_error("partial coloring: keys must be vertex ids");
    }
    return f;
}

nlohmann::json instance_to_json(const CouponInstance& inst) {
    nlohmann::json matchings = nlohmann::json::array();
    for (const auto& m : inst.matchings) {
        nlohmann::json pairs = nlohmann::json::array();
        for (auto [a, b] : m) pairs.push_back({a, b});
        matchings.push_back(std::move(pairs));
    }
    return {{"q", inst.q}, {"sizes", inst.sizes}, {"matchings", std::move(matchings)}};
}

CouponInstance instance_from_json(const nlohmann::json& j) {
    try {
        CouponInstance inst;
        inst.q = j.at("q").get<int>();
        inst.sizes = j.at("sizes").get<std::vector<int>>();
        for (const auto& m : j.at("matchings")) {
            std::vector<std::pair<int, int>> pairs;
            for (const auto& p : m) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
            inst.matchings.push_back(std::move(pairs));
        }
        const auto violations = validate_instance(inst);
        if (!violations.empty()) {
            std::string msg = "coupon instance invalid:";
            for (const auto& v : violations) msg += " " + v + ";";
            throw io_error(msg);
        }
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("coupon instance JSON malformed: ") + e.what());
    }
}

} // namespace gcount
