// gcount: exact counting toolkit for graph colorings, DP-colorings, and the
// probabilistic experiments around them. Subcommands: count, verify-corpus,
// coupon, random-regular, bounds, sweep, schema-check.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcount/bounds.hpp"
#include "gcount/coupon.hpp"
#include "gcount/cover.hpp"
#include "gcount/exact_count.hpp"
#include "gcount/graph.hpp"
#include "gcount/io.hpp"
#include "gcount/pairing.hpp"
#include "gcount/parallel.hpp"
#include "gcount/partial.hpp"
#include "gcount/stats.hpp"

using nlohmann::json;
using namespace gcount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitWorkLimit = 3;

struct Output {
    std::string path; // empty = stdout
    std::ofstream file;
    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw io_error("cannot open " + path + " for writing");
        }
        return file;
    }
};

double parse_threshold(const std::string& text) {
    if (text == "inf" || text == "+inf" || text == "infinity")
        return std::numeric_limits<double>::infinity();
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw io_error("cannot parse threshold '" + text + "'");
    }
}

std::vector<int> parse_vertex_set(const std::string& text, int n) {
    std::vector<int> out;
    if (text == "all") {
        out.resize(n);
        for (int v = 0; v < n; ++v) out[v] = v;
        return out;
    }
    if (text == "none" || text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw io_error("cannot parse vertex set entry '" + tok + "'");
        }
    }
    return out;
}

std::string format_double(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

std::string mpq_string(const mpq_class& v) { return v.get_str(); }

// ---------------------------------------------------------------- count ----

struct CountOptions {
    std::string graph_path;
    std::string named_spec;
    std::string cover_path;
    std::string coloring_path;
    std::string object = "colorings";
    std::string u_spec = "all";
    std::string d_spec = "inf";
    double ell = 0.0;
    int q = 0;
    std::string method = "auto";
    std::uint64_t work_limit = kDefaultWorkLimit;
    std::string out;
};

json count_config(const CountOptions& opt) {
    return {{"graph", opt.graph_path},   {"named", opt.named_spec},
            {"cover", opt.cover_path},   {"coloring", opt.coloring_path},
            {"object", opt.object},      {"u", opt.u_spec},
            {"ell", opt.ell},            {"d", opt.d_spec},
            {"q", opt.q},                {"method", opt.method},
            {"work_limit", opt.work_limit}};
}

int run_count(const CountOptions& opt) {
    Output output{opt.out, {}};
    std::vector<Graph> graphs;
    std::unique_ptr<DPCover> cover;
    std::string source;
    if (!opt.cover_path.empty()) {
        std::ifstream in(opt.cover_path);
        if (!in) throw io_error("cannot open " + opt.cover_path);
        json j;
        in >> j;
        cover = std::make_unique<DPCover>(cover_from_json(j));
        graphs.push_back(cover->base);
        source = opt.cover_path;
    } else if (!opt.named_spec.empty()) {
        graphs.push_back(named_graph(opt.named_spec));
        source = opt.named_spec;
    } else if (!opt.graph_path.empty()) {
        graphs = load_graphs(opt.graph_path);
        source = opt.graph_path;
    } else {
        throw io_error("count: one of --graph, --named, --cover is required");
    }

    for (const auto& g : graphs) {
        DPCover working;
        const bool needs_cover = opt.object != "colorings" && opt.object != "independent-sets";
        if (needs_cover) {
            if (cover) {
                working = *cover;
            } else {
                if (opt.q < 1) throw io_error("count: --q is required to build a canonical cover");
                working = canonical_cover(g, opt.q);
            }
        }
        CountResult result{0, CountMethod::enumeration, 0};
        const int q_used = needs_cover ? working.fold : opt.q;
        if (opt.object == "colorings") {
            if (opt.method == "enumeration")
                result = count_colorings_enumeration(g, opt.q, opt.work_limit);
            else if (opt.method == "deletion-contraction")
                result = count_colorings_deletion_contraction(g, opt.q, opt.work_limit);
            else
                result = count_colorings(g, opt.q, opt.work_limit);
        } else if (opt.object == "independent-sets") {
            result = count_independent_sets(g, opt.work_limit);
        } else if (opt.object == "h-colorings") {
            result = count_H_colorings(working, opt.work_limit);
        } else if (opt.object == "partial") {
            result = count_partial_colorings(working,
                                             parse_vertex_set(opt.u_spec, g.vertex_count()),
                                             opt.work_limit);
        } else if (opt.object == "good") {
            result = count_good_colorings(working,
                                          parse_vertex_set(opt.u_spec, g.vertex_count()),
                                          opt.ell, parse_threshold(opt.d_spec), opt.work_limit);
        } else if (opt.object == "completions") {
            if (opt.coloring_path.empty())
                throw io_error("count: --coloring is required for completions");
            std::ifstream in(opt.coloring_path);
            if (!in) throw io_error("cannot open " + opt.coloring_path);
            json j;
            in >> j;
            result = count_completions(working, partial_from_json(j, g.vertex_count()),
                                       opt.work_limit);
        } else {
            throw io_error("count: unknown object '" + opt.object + "'");
        }
        const json record = {{"command", "count"},
                             {"graph_id", to_graph6(g)},
                             {"source", source},
                             {"n", g.vertex_count()},
                             {"m", g.edge_count()},
                             {"q", q_used},
                             {"object", opt.object},
                             {"value", result.value.get_str()},
                             {"method", to_string(result.method)},
                             {"work", result.work},
                             {"config", count_config(opt)}};
        output.stream() << record.dump() << '\n';
    }
    return kExitOk;
}

// -------------------------------------------------------- verify-corpus ----

struct VerifyOptions {
    int n_max = 5;
    int q_min = 1;
    int q_max = 4;
    std::string graphs_path; // optional external corpus
    std::uint64_t work_limit = kDefaultWorkLimit;
    unsigned threads = default_thread_count();
    std::string out;
};

struct GraphChecks {
    std::string graph_id;
    long long checks = 0;
    std::vector<json> failures;
};

GraphChecks verify_one(const Graph& g, const VerifyOptions& opt) {
    GraphChecks result;
    result.graph_id = to_graph6(g);
    const long long n = g.vertex_count(), m = g.edge_count();
    const bool bipartite = is_bipartite(g);
    const int delta_max = max_degree(g);
    const mpz_class indep = count_independent_sets(g, opt.work_limit).value;

    auto fail = [&](int q, const std::string& check, const std::string& lhs,
                    const std::string& rhs) {
        result.failures.push_back({{"graph_id", result.graph_id},
                                   {"q", q},
                                   {"check", check},
                                   {"lhs", lhs},
                                   {"rhs", rhs}});
    };

    for (int q = opt.q_min; q <= opt.q_max; ++q) {
        const mpz_class c = count_colorings(g, q, opt.work_limit).value;
        const auto cover = canonical_cover(g, q);
        const mpz_class pcol =
            count_partial_colorings(cover, all_vertices(g), opt.work_limit).value;
        const mpq_class partial_bound = partial_lower_bound_exact(n, m, q);

        // |pcol| >= (1 - 1/q)^m q^n, exact rational comparison.
        ++result.checks;
        if (mpq_class(pcol) < partial_bound)
            fail(q, "partial-bound", pcol.get_str(), mpq_string(partial_bound));

        // c <= i(G)^q.
        ++result.checks;
        mpz_class indep_pow;
        mpz_pow_ui(indep_pow.get_mpz_t(), indep.get_mpz_t(), static_cast<unsigned long>(q));
        if (c > indep_pow) fail(q, "independent-set-chain", c.get_str(), indep_pow.get_str());

        // Bipartite baseline: c >= (1 - 1/q)^m q^n.
        if (bipartite) {
            ++result.checks;
            if (mpq_class(c) < partial_bound)
                fail(q, "bipartite-baseline", c.get_str(), mpq_string(partial_bound));
        }

        // Main bound wherever it is non-vacuous.
        if (q >= 2 && delta_max >= 1) {
            const auto bound = main_lower_bound(n, m, delta_max, q);
            if (!bound.vacuous) {
                ++result.checks;
                const double tolerance = 1e-10 * std::max(1.0, std::fabs(bound.log_value));
                if (c == 0 || log_mpz(c) < bound.log_value - tolerance)
                    fail(q, "main-bound", c.get_str(), format_double(bound.log_value));
            }
        }
    }
    return result;
}

// threads is a resource knob, not part of the experiment definition, so it
// stays out of the embedded config (results are thread-count independent).
json verify_config(const VerifyOptions& opt) {
    return {{"n_max", opt.n_max},   {"q_min", opt.q_min},
            {"q_max", opt.q_max},   {"graphs", opt.graphs_path},
            {"work_limit", opt.work_limit}};
}

int run_verify_corpus(const VerifyOptions& opt) {
    if (opt.n_max > kMaxCorpusVertices)
        throw io_error("verify-corpus: --n-max is capped at " +
                       std::to_string(kMaxCorpusVertices));
    Output output{opt.out, {}};
    std::vector<Graph> corpus;
    int skipped = 0;
    auto admit = [&](const Graph& g) {
        // Triangle-free precondition filter.
        if (is_triangle_free(g))
            corpus.push_back(g);
        else
            ++skipped;
    };
    if (!opt.graphs_path.empty()) {
        for (const auto& g : load_graphs(opt.graphs_path)) admit(g);
    } else {
        for_each_labeled_graph_up_to(opt.n_max,
                                     [&](const Graph& g, std::uint64_t) { admit(g); });
    }

    std::vector<GraphChecks> results(corpus.size());
    parallel_for(corpus.size(), opt.threads,
                 [&](std::size_t i) { results[i] = verify_one(corpus[i], opt); });

    long long checks = 0;
    json failures = json::array();
    for (const auto& r : results) {
        checks += r.checks;
        for (const auto& f : r.failures) failures.push_back(f);
    }
    const json report = {{"command", "verify-corpus"},
                         {"config", verify_config(opt)},
                         {"graphs_checked", corpus.size()},
                         {"graphs_skipped_by_filter", skipped},
                         {"checks", checks},
                         {"failures", failures}};
    output.stream() << report.dump(2) << '\n';
    return failures.empty() ? kExitOk : kExitVerifyFailure;
}

// --------------------------------------------------------------- coupon ----

struct CouponOptions {
    int q = 10;
    int k = 5;
    int delta_max = 0; // defaults to max(k, 1)
    double eps = 0.5;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    int instances = 1;
    std::string instance_path;
    std::string out;
};

int run_coupon(const CouponOptions& opt) {
    Output output{opt.out, {}};
    const int delta_max = opt.delta_max > 0 ? opt.delta_max : std::max(opt.k, 1);
    const auto params = derive_params(delta_max, opt.q, opt.eps, 1);
    const double analytic_b = std::exp(-std::pow(opt.q, opt.eps / 2.0) / 8.0);
    const double analytic_c = std::exp(-std::pow(opt.q, opt.eps / 2.0) / 300.0);

    auto& os = output.stream();
    os << "# config: q=" << opt.q << " k=" << opt.k << " delta=" << delta_max
       << " eps=" << opt.eps << " trials=" << opt.trials << " seed=" << opt.seed
       << " instances=" << opt.instances << " instance_file=" << opt.instance_path
       << " ell=" << format_double(params.ell) << " d=" << format_double(params.d)
       << " q_large_holds=" << (q_large_holds(opt.q, delta_max, opt.eps) ? "true" : "false")
       << "\n";
    os << "instance_id,q,k,ell,d,exact_E,jensen_LB,mc_tail_b,analytic_b,mc_tail_c,analytic_c\n";

    std::vector<CouponInstance> instances;
    if (!opt.instance_path.empty()) {
        std::ifstream in(opt.instance_path);
        if (!in) throw io_error("cannot open " + opt.instance_path);
        json j;
        in >> j;
        instances.push_back(instance_from_json(j));
    } else {
        for (int i = 0; i < opt.instances; ++i)
            instances.push_back(random_instance(opt.q, opt.k, opt.seed + i));
    }
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& inst = instances[i];
        const auto tails =
            monte_carlo_tails(inst, params.ell, params.d, opt.trials, opt.seed + 7777 + i);
        os << i << ',' << inst.q << ',' << inst.k() << ',' << format_double(params.ell) << ','
           << format_double(params.d) << ',' << mpq_string(exact_expected_survivors(inst)) << ','
           << format_double(jensen_lower_bound(inst.q, inst.k())) << ','
           << format_double(tails.p_small_list) << ',' << format_double(analytic_b) << ','
           << format_double(tails.p_high_degree) << ',' << format_double(analytic_c) << '\n';
    }
    return kExitOk;
}

// ------------------------------------------------------- random-regular ----

struct RandomRegularOptions {
    int n = 10;
    int delta_max = 3;
    int q = 3;
    std::uint64_t trials = 200;
    std::uint64_t seed = 1;
    std::uint64_t work_limit = kDefaultWorkLimit;
    std::string sample_graph_path;
    std::string out;
};

int run_random_regular(const RandomRegularOptions& opt) {
    Output output{opt.out, {}};
    auto& os = output.stream();
    os << "# config: n=" << opt.n << " delta=" << opt.delta_max << " q=" << opt.q
       << " trials=" << opt.trials << " seed=" << opt.seed << " work_limit=" << opt.work_limit
       << "\n";
    const auto est = estimate_expected_colorings(opt.n, opt.delta_max, opt.q, opt.trials,
                                                 opt.seed, opt.work_limit);
    os << "n,delta,q,trials,mean_X,stderr,ceiling,ratio\n";
    os << est.n << ',' << est.delta << ',' << est.q << ',' << est.trials << ','
       << format_double(est.mean) << ',' << format_double(est.std_error) << ','
       << format_double(est.ceiling) << ',' << format_double(est.ratio) << '\n';
    if (!opt.sample_graph_path.empty()) {
        const auto sampled = sample_simple_triangle_free(opt.n, opt.delta_max, opt.seed);
        save_edge_list(opt.sample_graph_path, sampled.graph);
        os << "# sampled simple triangle-free graph written to " << opt.sample_graph_path
           << " after " << sampled.attempts << " attempt(s)\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------- bounds ----

struct BoundsOptions {
    int delta_max = 3;
    int q = 12;
    double eps = 0.5;
    long long n = 10;
    long long m = 15;
    std::string out;
};

int run_bounds(const BoundsOptions& opt) {
    Output output{opt.out, {}};
    auto& os = output.stream();
    const auto params = derive_params(opt.delta_max, opt.q, opt.eps, opt.n, opt.m);
    os << "# config: delta=" << opt.delta_max << " q=" << opt.q << " eps=" << opt.eps
       << " n=" << opt.n << " m=" << opt.m << "\n";
    os << "# params: ell=" << format_double(params.ell) << " d=" << format_double(params.d)
       << " delta=" << format_double(params.delta) << " eta=" << format_double(params.eta)
       << " p_flaw=" << format_double(params.p_flaw) << " gamma=" << format_double(params.gamma)
       << "\n";
    os << "formula_id,n,m,delta,q,eps,log_value,value_if_small,vacuous\n";

    auto emit = [&](const std::string& id, double log_value, bool vacuous) {
        std::string small;
        if (!vacuous && std::isfinite(log_value) && std::fabs(log_value) < 700.0)
            small = format_double(std::exp(log_value));
        if (std::isinf(log_value) && log_value < 0 && !vacuous) small = "0";
        os << id << ',' << opt.n << ',' << opt.m << ',' << opt.delta_max << ',' << opt.q << ','
           << opt.eps << ',' << (vacuous ? "-inf" : format_double(log_value)) << ',' << small
           << ',' << (vacuous ? "true" : "false") << '\n';
    };

    const auto main_b = main_lower_bound(opt.n, opt.m, opt.delta_max, opt.q);
    emit(main_b.formula_id, main_b.log_value, main_b.vacuous);
    const auto partial_b = partial_lower_bound(opt.n, opt.m, opt.q);
    emit(partial_b.formula_id, partial_b.log_value, partial_b.vacuous);
    const auto good_b = good_lower_bound(opt.n, opt.m, opt.q, opt.eps);
    emit(good_b.formula_id, good_b.log_value, good_b.vacuous);
    if (opt.n >= 2) {
        const auto upper = random_upper_bound(opt.n, opt.delta_max, opt.q);
        emit(upper.formula_id, upper.log_value, upper.vacuous);
    }
    const auto comp = completion_lower_bound(params.ell, opt.n);
    emit("completion-all-blank", comp.log_value, comp.vacuous);
    emit("double-count-factor", double_count_factor(params.ell, opt.n), false);
    if (opt.delta_max >= 2) {
        const auto reference = corollary_values(opt.n, opt.delta_max, opt.eps);
        emit("reference-small-q", reference.small_q_log, false);
        emit("reference-indep-sets", reference.indep_log, false);
        emit("reference-large-q", reference.large_q_log, false);
    }
    return kExitOk;
}

// ---------------------------------------------------------------- sweep ----

struct SweepOptions {
    int n_max = 4;
    int q_min = 1;
    int q_max = 4;
    bool include_all = false; // default: triangle-free corpus only
    std::uint64_t work_limit = kDefaultWorkLimit;
    unsigned threads = default_thread_count();
    std::string out;
};

int run_sweep(const SweepOptions& opt) {
    if (opt.n_max > kMaxCorpusVertices)
        throw io_error("sweep: --n-max is capped at " + std::to_string(kMaxCorpusVertices));
    Output output{opt.out, {}};
    auto& os = output.stream();
    os << "# config: n_max=" << opt.n_max << " q_min=" << opt.q_min << " q_max=" << opt.q_max
       << " include_all=" << (opt.include_all ? "true" : "false")
       << " work_limit=" << opt.work_limit << " threads=" << opt.threads << "\n";
    os << "graph_id,n,m,q,c,i_count,pcol,partial_bound_log,main_bound_log,main_vacuous\n";

    std::vector<Graph> corpus;
    for_each_labeled_graph_up_to(opt.n_max, [&](const Graph& g, std::uint64_t) {
        if (opt.include_all || is_triangle_free(g)) corpus.push_back(g);
    });

    std::vector<std::string> rows(corpus.size());
    parallel_for(corpus.size(), opt.threads, [&](std::size_t idx) {
        const Graph& g = corpus[idx];
        std::ostringstream row;
        const long long n = g.vertex_count(), m = g.edge_count();
        const int delta_max = max_degree(g);
        const mpz_class indep = count_independent_sets(g, opt.work_limit).value;
        for (int q = opt.q_min; q <= opt.q_max; ++q) {
            const mpz_class c = count_colorings(g, q, opt.work_limit).value;
            const mpz_class pcol =
                count_partial_colorings(canonical_cover(g, q), all_vertices(g), opt.work_limit)
                    .value;
            const auto partial_b = partial_lower_bound(n, m, q);
            row << to_graph6(g) << ',' << n << ',' << m << ',' << q << ',' << c.get_str() << ','
                << indep.get_str() << ',' << pcol.get_str() << ','
                << format_double(partial_b.log_value) << ',';
            if (q >= 2 && delta_max >= 1) {
                const auto main_b = main_lower_bound(n, m, delta_max, q);
                row << (main_b.vacuous ? "-inf" : format_double(main_b.log_value)) << ','
                    << (main_b.vacuous ? "true" : "false") << '\n';
            } else {
                row << "-inf,true\n";
            }
        }
        rows[idx] = row.str();
    });
    for (const auto& row : rows) os << row;
    return kExitOk;
}

// --------------------------------------------------------- schema-check ----

struct SchemaOptions {
    std::string kind;
    std::string file;
};

void require_fields(const json& j, const std::vector<std::pair<std::string, std::string>>& spec,
                    std::vector<std::string>& problems, const std::string& where) {
    for (const auto& [key, type] : spec) {
        if (!j.contains(key)) {
            problems.push_back(where + ": missing field '" + key + "'");
            continue;
        }
        const auto& v = j.at(key);
        const bool ok = (type == "string" && v.is_string()) ||
                        (type == "number" && v.is_number()) ||
                        (type == "object" && v.is_object()) || (type == "array" && v.is_array());
        if (!ok) problems.push_back(where + ": field '" + key + "' should be " + type);
    }
}

void check_csv(const std::string& path, const std::string& header,
               std::vector<std::string>& problems) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    std::string line;
    bool seen_header = false;
    const std::size_t columns =
        static_cast<std::size_t>(std::count(header.begin(), header.end(), ',') + 1);
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line[0] == '#') continue;
        if (!seen_header) {
            if (line != header)
                problems.push_back("line " + std::to_string(row) + ": expected header '" +
                                   header + "'");
            seen_header = true;
            continue;
        }
        const std::size_t cells =
            static_cast<std::size_t>(std::count(line.begin(), line.end(), ',') + 1);
        if (cells != columns)
            problems.push_back("line " + std::to_string(row) + ": expected " +
                               std::to_string(columns) + " cells, found " +
                               std::to_string(cells));
    }
    if (!seen_header) problems.push_back("missing header row");
}

int run_schema_check(const SchemaOptions& opt) {
    std::vector<std::string> problems;
    if (opt.kind == "count-records") {
        std::ifstream in(opt.file);
        if (!in) throw io_error("cannot open " + opt.file);
        std::string line;
        int row = 0;
        while (std::getline(in, line)) {
            ++row;
            if (line.empty()) continue;
            json j;
            try {
                j = json::parse(line);
            } catch (const json::exception& e) {
                problems.push_back("line " + std::to_string(row) + ": " + e.what());
                continue;
            }
            require_fields(j,
                           {{"command", "string"},
                            {"graph_id", "string"},
                            {"q", "number"},
                            {"object", "string"},
                            {"value", "string"},
                            {"method", "string"},
                            {"work", "number"},
                            {"config", "object"}},
                           problems, "line " + std::to_string(row));
        }
    } else if (opt.kind == "cover") {
        std::ifstream in(opt.file);
        if (!in) throw io_error("cannot open " + opt.file);
        json j;
        try {
            in >> j;
            cover_from_json(j);
        } catch (const std::exception& e) {
            problems.push_back(e.what());
        }
    } else if (opt.kind == "coupon-instance") {
        std::ifstream in(opt.file);
        if (!in) throw io_error("cannot open " + opt.file);
        json j;
        try {
            in >> j;
            instance_from_json(j);
        } catch (const std::exception& e) {
            problems.push_back(e.what());
        }
    } else if (opt.kind == "coupon-csv") {
        check_csv(opt.file,
                  "instance_id,q,k,ell,d,exact_E,jensen_LB,mc_tail_b,analytic_b,mc_tail_c,"
                  "analytic_c",
                  problems);
    } else if (opt.kind == "rr-csv") {
        check_csv(opt.file, "n,delta,q,trials,mean_X,stderr,ceiling,ratio", problems);
    } else if (opt.kind == "bounds-csv") {
        check_csv(opt.file, "formula_id,n,m,delta,q,eps,log_value,value_if_small,vacuous",
                  problems);
    } else if (opt.kind == "sweep-csv") {
        check_csv(opt.file,
                  "graph_id,n,m,q,c,i_count,pcol,partial_bound_log,main_bound_log,main_vacuous",
                  problems);
    } else {
        throw io_error("schema-check: unknown kind '" + opt.kind + "'");
    }
    if (problems.empty()) {
        std::cout << "schema-check: " << opt.file << " conforms to " << opt.kind << "\n";
        return kExitOk;
    }
    for (const auto& p : problems) std::cerr << "schema-check: " << p << "\n";
    return kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gcount: exact counting for graph colorings and DP-colorings, with "
                 "coupon-collector, random-regular, and bound-evaluation experiments"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI file (flags win on conflict)");

    CountOptions count_opt;
    auto* count_cmd =
        app.add_subcommand("count", "Exact counts of colorings and related objects");
    count_cmd->add_option("--graph", count_opt.graph_path, "Edge-list or .g6 graph file");
    count_cmd->add_option("--named", count_opt.named_spec, "Named graph, e.g. cycle:5");
    count_cmd->add_option("--cover", count_opt.cover_path, "Cover JSON file");
    count_cmd->add_option("--coloring", count_opt.coloring_path,
                          "Partial coloring JSON (for --object completions)");
    count_cmd->add_option("--object", count_opt.object,
                          "colorings|h-colorings|partial|good|completions|independent-sets");
    count_cmd->add_option("--q", count_opt.q, "Number of colors / fold");
    count_cmd->add_option("--u", count_opt.u_spec, "Vertex set: all, none, or comma list");
    count_cmd->add_option("--ell", count_opt.ell, "Flaw threshold ell");
    count_cmd->add_option("--d", count_opt.d_spec, "Flaw threshold d (accepts inf)");
    count_cmd->add_option("--method", count_opt.method, "auto|enumeration|deletion-contraction");
    count_cmd->add_option("--work-limit", count_opt.work_limit, "Search-node budget");
    count_cmd->add_option("--out", count_opt.out, "Output file (default stdout)");

    VerifyOptions verify_opt;
    auto* verify_cmd =
        app.add_subcommand("verify-corpus", "Check the counting inequalities on a small corpus");
    verify_cmd->add_option("--n-max", verify_opt.n_max, "Corpus size cap (<= 7)");
    verify_cmd->add_option("--q-min", verify_opt.q_min, "Smallest q");
    verify_cmd->add_option("--q-max", verify_opt.q_max, "Largest q");
    verify_cmd->add_option("--graphs", verify_opt.graphs_path,
                           "Verify these graphs instead of the generated corpus");
    verify_cmd->add_option("--work-limit", verify_opt.work_limit, "Search-node budget");
    verify_cmd->add_option("--threads", verify_opt.threads, "Worker pool size");
    verify_cmd->add_option("--out", verify_opt.out, "Output file (default stdout)");

    CouponOptions coupon_opt;
    auto* coupon_cmd = app.add_subcommand("coupon", "Coupon-collector experiments");
    coupon_cmd->add_option("--q", coupon_opt.q, "Size of L_0");
    coupon_cmd->add_option("--k", coupon_opt.k, "Number of secondary sets");
    coupon_cmd->add_option("--delta", coupon_opt.delta_max, "Degree bound (defaults to k)");
    coupon_cmd->add_option("--eps", coupon_opt.eps, "Epsilon for the analytic tail bounds");
    coupon_cmd->add_option("--trials", coupon_opt.trials, "Monte Carlo trials");
    coupon_cmd->add_option("--seed", coupon_opt.seed, "Base seed");
    coupon_cmd->add_option("--instances", coupon_opt.instances, "Random instances to generate");
    coupon_cmd->add_option("--instance", coupon_opt.instance_path, "Instance JSON file");
    coupon_cmd->add_option("--out", coupon_opt.out, "Output file (default stdout)");

    RandomRegularOptions rr_opt;
    auto* rr_cmd = app.add_subcommand("random-regular", "Pairing-model experiments");
    rr_cmd->add_option("--n", rr_opt.n, "Vertices");
    rr_cmd->add_option("--delta", rr_opt.delta_max, "Degree");
    rr_cmd->add_option("--q", rr_opt.q, "Colors");
    rr_cmd->add_option("--trials", rr_opt.trials, "Monte Carlo trials");
    rr_cmd->add_option("--seed", rr_opt.seed, "Base seed");
    rr_cmd->add_option("--work-limit", rr_opt.work_limit, "Search-node budget");
    rr_cmd->add_option("--sample-graph", rr_opt.sample_graph_path,
                       "Also write one simple triangle-free sample as an edge list");
    rr_cmd->add_option("--out", rr_opt.out, "Output file (default stdout)");

    BoundsOptions bounds_opt;
    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate every closed-form bound");
    bounds_cmd->add_option("--delta", bounds_opt.delta_max, "Maximum degree");
    bounds_cmd->add_option("--q", bounds_opt.q, "Colors");
    bounds_cmd->add_option("--eps", bounds_opt.eps, "Epsilon");
    bounds_cmd->add_option("--n", bounds_opt.n, "Vertices");
    bounds_cmd->add_option("--m", bounds_opt.m, "Edges");
    bounds_cmd->add_option("--out", bounds_opt.out, "Output file (default stdout)");

    SweepOptions sweep_opt;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Corpus x q sweep of exact counts vs bounds (data only)");
    sweep_cmd->add_option("--n-max", sweep_opt.n_max, "Corpus size cap (<= 7)");
    sweep_cmd->add_option("--q-min", sweep_opt.q_min, "Smallest q");
    sweep_cmd->add_option("--q-max", sweep_opt.q_max, "Largest q");
    sweep_cmd->add_flag("--include-all", sweep_opt.include_all,
                        "Sweep every labeled graph, not only the triangle-free ones");
    sweep_cmd->add_option("--work-limit", sweep_opt.work_limit, "Search-node budget");
    sweep_cmd->add_option("--threads", sweep_opt.threads, "Worker pool size");
    sweep_cmd->add_option("--out", sweep_opt.out, "Output file (default stdout)");

    SchemaOptions schema_opt;
    auto* schema_cmd = app.add_subcommand("schema-check", "Validate emitted records");
    schema_cmd
        ->add_option("--kind", schema_opt.kind,
                     "count-records|cover|coupon-instance|coupon-csv|rr-csv|bounds-csv|sweep-csv")
        ->required();
    schema_cmd->add_option("--file", schema_opt.file, "File to validate")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (count_cmd->parsed()) return run_count(count_opt);
        if (verify_cmd->parsed()) return run_verify_corpus(verify_opt);
        if (coupon_cmd->parsed()) return run_coupon(coupon_opt);
        if (rr_cmd->parsed()) return run_random_regular(rr_opt);
        if (bounds_cmd->parsed()) return run_bounds(bounds_opt);
        if (sweep_cmd->parsed()) return run_sweep(sweep_opt);
        if (schema_cmd->parsed()) return run_schema_check(schema_opt);
    } catch (const work_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitWorkLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
