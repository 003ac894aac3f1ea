#pragma once

#include <cstdint>
#include <utility>

namespace lcllab {

struct Interval {
  double low = 0.0;
  double high = 1.0;
  double half_width() const { return (high - low) / 2.0; }
};

/// Wilson score interval for a binomial proportion (default 95%).
Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z = 1.959964);

/// P[X <= k] for X ~ Binomial(n, p), exact via log factorials.
double binomial_cdf(std::int64_t k, std::int64_t n, double p);

/// One-sided test of H0: success probability >= p0. Returns the p-value
/// P[X <= observed | p0]; small values reject H0.
double binomial_one_sided_p(std::int64_t successes, std::int64_t trials, double p0);

/// Pearson chi-square independence test for a 2x2 contingency table
/// [[a, b], [c, d]]. Returns the p-value at df = 1; degenerate marginals give
/// p = 1 (a constant variable is independent of anything).
double chi_square_2x2_p(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// Least-squares fit y ~ a*x + b; returns {a, b}.
std::pair<double, double> linear_fit(const double* x, const double* y, int n);

}  // namespace lcllab
