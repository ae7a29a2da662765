#include <doctest.h>

#include <cmath>

#include "gcount/rng.hpp"
#include "gcount/stats.hpp"

using namespace gcount;

TEST_CASE("chi-square p-values") {
    // df = 2 closes to p = exp(-x/2).
    for (double x : {0.5, 2.0, 13.8155}) {
        CHECK(chi_square_pvalue(x, 2) == doctest::Approx(std::exp(-x / 2.0)).epsilon(1e-10));
    }
    // Classic 5% quantiles.
    CHECK(chi_square_pvalue(3.841459, 1) == doctest::Approx(0.05).epsilon(1e-5));
    CHECK(chi_square_pvalue(124.342, 104) == doctest::Approx(0.0848313).epsilon(1e-4));
    CHECK(chi_square_pvalue(128.80391, 104) == doctest::Approx(0.05).epsilon(1e-4));
    CHECK(chi_square_pvalue(0.0, 7) == doctest::Approx(1.0));
    CHECK(regularized_gamma_upper(1.0, 2.5) == doctest::Approx(std::exp(-2.5)).epsilon(1e-12));
    CHECK_THROWS_AS(chi_square_pvalue(1.0, 0), std::invalid_argument);
}

TEST_CASE("goodness of fit on genuinely uniform draws") {
    Rng rng(12345);
    std::vector<std::uint64_t> counts(10, 0);
    for (int i = 0; i < 100000; ++i) ++counts[rng.below(10)];
    CHECK(chi_square_gof_uniform(counts).pvalue > 1e-3);
}

TEST_CASE("rng determinism and bounds") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(7);
    for (int i = 0; i < 1000; ++i) {
        const auto x = c.below(13);
        CHECK(x < 13);
    }
    for (int i = 0; i < 1000; ++i) {
        const double u = c.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}
