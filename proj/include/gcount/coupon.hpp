#ifndef GCOUNT_COUPON_HPP
#define GCOUNT_COUPON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gcount/rng.hpp"

namespace gcount {

// The abstract coupon-collector setup: a primary set L_0 of size q, secondary
// sets L_1..L_k of given sizes, and one partial matching per i pairing
// elements of L_0 (indices 0..q-1) with elements of L_i (indices 0..|L_i|-1).
struct CouponInstance {
    int q = 0;
    std::vector<int> sizes;
    // matchings[i]: (alpha, beta) pairs, injective on both sides, sorted.
    std::vector<std::vector<std::pair<int, int>>> matchings;

    int k() const { return static_cast<int>(sizes.size()); }
};

// Structural check; returns violations (empty = valid).
std::vector<std::string> validate_instance(const CouponInstance& inst);

struct CouponOutcome {
    std::vector<char> survives;  // survives[alpha]: alpha not matched to any f(i)
    std::vector<int> degrees;    // deg'(alpha): i in N_alpha with f(i) = blank
    int survivor_count = 0;
};

// One run: each f(i) uniform on L_i + blank, independently.
CouponOutcome sample(const CouponInstance& inst, Rng& rng);
CouponOutcome sample(const CouponInstance& inst, std::uint64_t seed);

// E|L_0'| = sum_alpha prod_{i in N_alpha} (1 - 1/(|L_i|+1)), exactly.
mpq_class exact_expected_survivors(const CouponInstance& inst);

// rho(alpha) = sum_{i in N_alpha} 1/|L_i|.
mpq_class rho(const CouponInstance& inst, int alpha);

struct TailEstimates {
    double p_small_list;  // P[|L_0'| < ell]
    double se_small_list;
    double p_high_degree; // P[exists surviving alpha with deg'(alpha) > d]
    double se_high_degree;
    std::uint64_t trials;
};

TailEstimates monte_carlo_tails(const CouponInstance& inst, double ell, double d,
                                std::uint64_t trials, std::uint64_t seed);

// q * exp(-k/q).
double jensen_lower_bound(int q, int k);

// The large-q side condition q/exp(delta/q) >= q^(eps/2); reported in tables,
// never asserted at desk scale.
bool q_large_holds(int q, int delta, double eps);

// Random instance: sizes uniform in [1,q]; each matching injects a random
// subset of L_0 into L_i.
CouponInstance random_instance(int q, int k, std::uint64_t seed);

} // namespace gcount

#endif
