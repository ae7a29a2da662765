#include "gcount/bounds.hpp"

#include <cmath>
#include <limits>

#include "gcount/graph.hpp"

namespace gcount {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

BoundParams derive_params(int delta_max, int q, double eps, long long n, long long m) {
    if (q < 1 || delta_max < 1)
        throw invalid_parameter_error("derive_params: need q >= 1 and delta >= 1");
    if (!(eps > 0.0 && eps < 1.0))
        throw invalid_parameter_error("derive_params: need 0 < eps < 1");
    if (n < 0 || m < 0) throw invalid_parameter_error("derive_params: need n, m >= 0");
    BoundParams p;
    p.delta_max = delta_max;
    p.q = q;
    p.n = n;
    p.m = m;
    p.eps = eps;
    const double decay = std::exp(-static_cast<double>(delta_max) / q);
    p.ell = q * decay / 2.0;
    p.d = q * decay / 50.0;
    p.delta = 4.0 * std::exp(static_cast<double>(delta_max) / q) / q;
    const double q_eps = std::pow(static_cast<double>(q), eps / 2.0);
    p.eta = std::exp(-q_eps / 600.0);
    p.p_flaw = std::exp(-q_eps / 400.0);
    p.gamma = gamma_rate(n);
    return p;
}

LogBound main_lower_bound(long long n, long long m, int delta_max, int q) {
    if (q < 2) throw invalid_parameter_error("main_lower_bound: q must be >= 2");
    const double delta = 4.0 * std::exp(static_cast<double>(delta_max) / q) / q;
    if (delta >= 1.0) return {kNegInf, true, "main"};
    const double value = static_cast<double>(m) * std::log1p(-1.0 / q) +
                         static_cast<double>(n) * std::log((1.0 - delta) * q);
    return {value, false, "main"};
}

LogBound partial_lower_bound(long long n, long long m, int q) {
    if (q < 1) throw invalid_parameter_error("partial_lower_bound: q must be >= 1");
    if (q == 1) return {m >= 1 ? kNegInf : 0.0, false, "partial"};
    const double value = static_cast<double>(m) * std::log1p(-1.0 / q) +
                         static_cast<double>(n) * std::log(static_cast<double>(q));
    return {value, false, "partial"};
}

mpq_class partial_lower_bound_exact(long long n, long long m, int q) {
    if (q < 1 || n < 0 || m < 0)
        throw invalid_parameter_error("partial_lower_bound_exact: bad arguments");
    mpz_class num, qn, qm;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(q - 1),
                  static_cast<unsigned long>(m));
    mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
    mpz_ui_pow_ui(qm.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(m));
    mpq_class result(num * qn, qm);
    result.canonicalize();
    return result;
}

LogBound good_lower_bound(long long n, long long m, int q, double eps) {
    if (q < 2) throw invalid_parameter_error("good_lower_bound: q must be >= 2");
    if (!(eps > 0.0 && eps < 1.0))
        throw invalid_parameter_error("good_lower_bound: need 0 < eps < 1");
    const double eta = std::exp(-std::pow(static_cast<double>(q), eps / 2.0) / 600.0);
    const auto partial = partial_lower_bound(n, m, q);
    return {static_cast<double>(n) * std::log1p(-eta) + partial.log_value, false, "good"};
}

LogBound random_upper_bound(long long n, int delta_max, int q) {
    if (q < 2) throw invalid_parameter_error("random_upper_bound: q must be >= 2");
    if (n < 2) throw invalid_parameter_error("random_upper_bound: n must be >= 2");
    const double gamma = gamma_rate(n);
    const double m = static_cast<double>(delta_max) * static_cast<double>(n) / 2.0;
    const double value = m * std::log1p(-1.0 / q) +
                         static_cast<double>(n) * std::log((1.0 + gamma) * q);
    return {value, false, "random-upper"};
}

CorollaryValues corollary_values(long long n, int delta_max, double eps) {
    if (delta_max < 2) throw invalid_parameter_error("corollary_values: delta must be >= 2");
    const double log_delta = std::log(static_cast<double>(delta_max));
    CorollaryValues v;
    v.small_q_log = (1.0 + eps / (1.0 + eps)) * log_delta / 2.0 * static_cast<double>(n);
    v.indep_log = log_delta * log_delta / (2.0 * delta_max) * static_cast<double>(n);
    v.large_q_log = static_cast<double>(n) * (log_delta - 0.5);
    return v;
}

LogBound completion_lower_bound(double ell, long long k) {
    if (!(ell > 0.0)) throw invalid_parameter_error("completion_lower_bound: ell must be > 0");
    if (k < 0) throw invalid_parameter_error("completion_lower_bound: k must be >= 0");
    return {static_cast<double>(k) * std::log(ell / 2.0), false, "completion"};
}

double double_count_factor(double ell, long long n) {
    if (!(ell > 0.0)) throw invalid_parameter_error("double_count_factor: ell must be > 0");
    if (n < 0) throw invalid_parameter_error("double_count_factor: n must be >= 0");
    return static_cast<double>(n) * std::log1p(2.0 / ell);
}

double double_count_binomial_log(double ell, long long n) {
    if (!(ell > 0.0)) throw invalid_parameter_error("double_count_binomial_log: ell must be > 0");
    if (n < 0) throw invalid_parameter_error("double_count_binomial_log: n must be >= 0");
    const double x = 2.0 / ell;
    double sum = 0.0, term = 1.0; // term = C(n,k) x^k
    for (long long k = 1; k <= n; ++k) {
        term *= x * static_cast<double>(n - k + 1) / static_cast<double>(k);
        sum += term;
    }
    return std::log1p(sum);
}

double gamma_rate(long long n) {
    if (n < 1) return 0.0;
    return 2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n);
}

} // namespace gcount
