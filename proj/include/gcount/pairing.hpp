#ifndef GCOUNT_PAIRING_HPP
#define GCOUNT_PAIRING_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "gcount/exact_count.hpp"
#include "gcount/graph.hpp"

namespace gcount {

// Perfect matching on delta*n points grouped into n cells of size delta;
// point x lives in cell x / delta.
struct Pairing {
    int n = 0;
    int delta = 0;
    std::vector<int> mate; // mate[x] = y

    int cell(int point) const { return point / delta; }
    int points() const { return n * delta; }
    // Canonical (min,max) pair list, sorted; usable as a dictionary key.
    std::vector<std::pair<int, int>> pairs() const;
};

// Uniformly random pairing: repeatedly match the smallest unmatched point to
// a uniform other unmatched point. Requires delta*n even.
Pairing sample_pairing(int n, int delta, std::uint64_t seed);

struct Alg1Step {
    int cmax_size; // |C_max| when x was drawn from it
    int u_size;    // |U| at that moment
    bool hit;      // y landed in C_max
};

// The color-class-aware generator: x is taken from a maximum color class
// (lowest class index, then lowest point id on ties), y uniform from the
// remaining uncovered points. f assigns each of the n cells a class in
// 0..q-1 and must be total. Produces the uniform pairing distribution.
Pairing generator_algorithm1(int n, int delta, const std::vector<int>& f, std::uint64_t seed,
                             std::vector<Alg1Step>* steps = nullptr);

// Multigraph on [n]: loops (u == v) and parallel edges preserved.
struct MultiGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

MultiGraph project(const Pairing& p);
bool is_simple(const MultiGraph& mg);
bool has_loop(const MultiGraph& mg);
// Collapses parallel edges; requires no loops.
Graph simplify(const MultiGraph& mg);

// Proper q-colorings of the multigraph as a constraint system: any loop
// forces 0, parallel edges collapse.
mpz_class count_multigraph_colorings(const MultiGraph& mg, int q,
                                     std::uint64_t work_limit = kDefaultWorkLimit);

struct SimpleSampleResult {
    Graph graph;
    std::uint64_t attempts;
};

// Rejection-samples pairings until the projection is simple and triangle-free.
SimpleSampleResult sample_simple_triangle_free(int n, int delta, std::uint64_t seed,
                                               std::uint64_t max_attempts = 1'000'000);

struct ColoringEstimate {
    int n, delta, q;
    std::uint64_t trials;
    double mean;        // Monte Carlo mean of c(G(P), q)
    double std_error;
    double ceiling;     // (1 - 1/q)^(delta*n/2) * n * q^n
    double log_ceiling;
    double ratio;       // mean / ceiling
};

// Monte Carlo estimate of E[c(G(P), q)] over uniform pairings, reported
// against the Markov-argument ceiling.
ColoringEstimate estimate_expected_colorings(int n, int delta, int q, std::uint64_t trials,
                                             std::uint64_t seed,
                                             std::uint64_t work_limit = kDefaultWorkLimit);

// Enumerates all (points-1)!! pairings of `points` points (cells are
// irrelevant to the enumeration). Visit receives the mate vector.
template <class Visit>
void for_each_pairing(int points, Visit&& visit) {
    if (points % 2 != 0) throw invalid_parameter_error("for_each_pairing: odd point count");
    std::vector<int> mate(points, -1);
    auto rec = [&](auto&& self) -> void {
        int x = -1;
        for (int i = 0; i < points; ++i) {
            if (mate[i] == -1) {
                x = i;
                break;
            }
        }
        if (x == -1) {
            visit(mate);
            return;
        }
        for (int y = x + 1; y < points; ++y) {
            if (mate[y] != -1) continue;
            mate[x] = y;
            mate[y] = x;
            self(self);
            mate[x] = -1;
            mate[y] = -1;
        }
    };
    rec(rec);
}

} // namespace gcount

#endif
