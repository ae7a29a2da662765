#ifndef GCOUNT_STATS_HPP
#define GCOUNT_STATS_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gcount {

// Regularized upper incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a),
// computed by the usual series / continued-fraction split.
inline double regularized_gamma_upper(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("regularized_gamma_upper: bad arguments");
    if (x == 0.0) return 1.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        // P(a,x) by series, return 1 - P.
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
        }
        double p = sum * std::exp(-x + a * std::log(x) - lg);
        return 1.0 - p;
    }
    // Q(a,x) by Lentz continued fraction.
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - lg) * h;
}

// Survival function of the chi-square distribution with dof degrees of freedom.
inline double chi_square_pvalue(double stat, int dof) {
    if (dof <= 0) throw std::invalid_argument("chi_square_pvalue: dof must be positive");
    if (stat <= 0.0) return 1.0;
    return regularized_gamma_upper(0.5 * dof, 0.5 * stat);
}

struct ChiSquareResult {
    double stat;
    int dof;
    double pvalue;
};

// Goodness-of-fit test of observed counts against cell probabilities.
// probs must sum to 1 and have the same length as observed.
inline ChiSquareResult chi_square_gof(const std::vector<std::uint64_t>& observed,
                                      const std::vector<double>& probs) {
    if (observed.size() != probs.size() || observed.empty())
        throw std::invalid_argument("chi_square_gof: size mismatch");
    std::uint64_t total = 0;
    for (auto c : observed) total += c;
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double expected = probs[i] * static_cast<double>(total);
        if (expected <= 0.0) throw std::invalid_argument("chi_square_gof: zero expected cell");
        const double diff = static_cast<double>(observed[i]) - expected;
        stat += diff * diff / expected;
    }
    const int dof = static_cast<int>(observed.size()) - 1;
    return {stat, dof, chi_square_pvalue(stat, dof)};
}

// Uniform-cells convenience overload.
inline ChiSquareResult chi_square_gof_uniform(const std::vector<std::uint64_t>& observed) {
    std::vector<double> probs(observed.size(), 1.0 / static_cast<double>(observed.size()));
    return chi_square_gof(observed, probs);
}

} // namespace gcount

#endif
