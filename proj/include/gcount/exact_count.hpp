#ifndef GCOUNT_EXACT_COUNT_HPP
#define GCOUNT_EXACT_COUNT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gcount/cover.hpp"
#include "gcount/graph.hpp"
#include "gcount/partial.hpp"

namespace gcount {

enum class CountMethod { enumeration, deletion_contraction };

const char* to_string(CountMethod m);

struct CountResult {
    mpz_class value;
    CountMethod method;
    std::uint64_t work; // search nodes visited
};

struct work_limit_error : std::runtime_error {
    std::uint64_t work;
    explicit work_limit_error(std::uint64_t w)
        : std::runtime_error("work limit exceeded after " + std::to_string(w) + " search nodes"),
          work(w) {}
};

inline constexpr std::uint64_t kDefaultWorkLimit = 100'000'000;

// c(G,q). Backtracking enumeration while q^n stays below the work limit,
// deletion-contraction beyond that.
CountResult count_colorings(const Graph& g, int q, std::uint64_t work_limit = kDefaultWorkLimit);

// Forced-method variants (the two routes must agree wherever both run).
CountResult count_colorings_enumeration(const Graph& g, int q,
                                        std::uint64_t work_limit = kDefaultWorkLimit);
CountResult count_colorings_deletion_contraction(const Graph& g, int q,
                                                 std::uint64_t work_limit = kDefaultWorkLimit);

// Total proper H-colorings of the cover's base graph.
CountResult count_H_colorings(const DPCover& cover, std::uint64_t work_limit = kDefaultWorkLimit);

// |pcol(U)|: proper partial H-colorings with domain inside U.
CountResult count_partial_colorings(const DPCover& cover, const std::vector<int>& U,
                                    std::uint64_t work_limit = kDefaultWorkLimit);

// |gcol(U)|: proper partial H-colorings of G (domain unrestricted) that are
// good on U for thresholds (ell, d).
CountResult count_good_colorings(const DPCover& cover, const std::vector<int>& U, double ell,
                                 double d, std::uint64_t work_limit = kDefaultWorkLimit);

// |Comp(g)|: total proper H-colorings agreeing with g wherever g is colored.
CountResult count_completions(const DPCover& cover, const PartialColoring& g,
                              std::uint64_t work_limit = kDefaultWorkLimit);

// i(G), the empty set included.
CountResult count_independent_sets(const Graph& g, std::uint64_t work_limit = kDefaultWorkLimit);

// Convenience: the full vertex set as a U argument.
std::vector<int> all_vertices(const Graph& g);

// Natural log of a positive count at full double precision (via the
// mantissa/exponent split, so the count itself may exceed double range).
double log_mpz(const mpz_class& value);

} // namespace gcount

#endif
