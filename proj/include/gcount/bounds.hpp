#ifndef GCOUNT_BOUNDS_HPP
#define GCOUNT_BOUNDS_HPP

#include <string>

#include <gmpxx.h>

namespace gcount {

// Derived quantities shared by the bound formulas. ell/d = 25 and
// delta*ell = 2 hold identically.
struct BoundParams {
    int delta_max;  // maximum degree bound
    int q;
    long long n;
    long long m;
    double eps;
    double ell;     // q / (2 exp(delta/q))
    double d;       // q / (50 exp(delta/q))
    double delta;   // 4 exp(delta/q) / q
    double eta;     // exp(-q^(eps/2)/600)
    double p_flaw;  // exp(-q^(eps/2)/400)
    double gamma;   // 2 log n / n
};

BoundParams derive_params(int delta_max, int q, double eps, long long n, long long m = 0);

// A bound value on natural-log scale. A vacuous bound carries no information
// (its error factor is nonpositive) and reports -infinity.
struct LogBound {
    double log_value;
    bool vacuous;
    std::string formula_id;
};

// log of (1 - 1/q)^m ((1 - delta) q)^n; vacuous iff delta >= 1.
LogBound main_lower_bound(long long n, long long m, int delta_max, int q);

// log of (1 - 1/q)^m q^n. For q = 1 with m >= 1 the value is 0 (log sentinel
// -inf, not vacuous).
LogBound partial_lower_bound(long long n, long long m, int q);

// The same quantity (1 - 1/q)^m q^n as an exact rational, the second route
// used for exact-comparison checks.
mpq_class partial_lower_bound_exact(long long n, long long m, int q);

// log of (1 - eta)^n (1 - 1/q)^m q^n.
LogBound good_lower_bound(long long n, long long m, int q, double eps);

// log of (1 - 1/q)^(delta*n/2) ((1 + gamma) q)^n with gamma = 2 log n / n.
LogBound random_upper_bound(long long n, int delta_max, int q);

// Leading-order reference exponents with the o(1)/O(1) terms dropped;
// reported, never asserted.
struct CorollaryValues {
    double small_q_log;   // (1 + eps/(1+eps)) * (log delta)/2 * n
    double indep_log;     // (log^2 delta)/(2 delta) * n
    double large_q_log;   // n * log(delta / sqrt(e))
};

CorollaryValues corollary_values(long long n, int delta_max, double eps);

// log of (ell/2)^k.
LogBound completion_lower_bound(double ell, long long k);

// log of (1 + 2/ell)^n.
double double_count_factor(double ell, long long n);

// The same factor through the binomial sum sum_k C(n,k) (2/ell)^k; agreement
// of the two routes is the built-in self-test.
double double_count_binomial_log(double ell, long long n);

// 2 log n / n.
double gamma_rate(long long n);

} // namespace gcount

#endif
