#include "lcllab/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace lcllab {

Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z) {
  if (trials <= 0) return {0.0, 1.0};
  double n = static_cast<double>(trials);
  double p = static_cast<double>(successes) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (p + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  Interval out{center - half, center + half};
  if (out.low < 0.0) out.low = 0.0;
  if (out.high > 1.0) out.high = 1.0;
  return out;
}

double binomial_cdf(std::int64_t k, std::int64_t n, double p) {
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  if (p <= 0.0) return 1.0;
  if (p >= 1.0) return 0.0;
  double logp = std::log(p), logq = std::log1p(-p);
  double sum = 0.0;
  for (std::int64_t i = 0; i <= k; ++i) {
    double lg = std::lgamma(static_cast<double>(n) + 1.0) -
                std::lgamma(static_cast<double>(i) + 1.0) -
                std::lgamma(static_cast<double>(n - i) + 1.0) +
                static_cast<double>(i) * logp + static_cast<double>(n - i) * logq;
    sum += std::exp(lg);
  }
  return sum > 1.0 ? 1.0 : sum;
}

double binomial_one_sided_p(std::int64_t successes, std::int64_t trials, double p0) {
  return binomial_cdf(successes, trials, p0);
}

double chi_square_2x2_p(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  double n = static_cast<double>(a + b + c + d);
  if (n <= 0) return 1.0;
  double r1 = static_cast<double>(a + b), r2 = static_cast<double>(c + d);
  double c1 = static_cast<double>(a + c), c2 = static_cast<double>(b + d);
  if (r1 == 0 || r2 == 0 || c1 == 0 || c2 == 0) return 1.0;
  double da = static_cast<double>(a) * static_cast<double>(d) -
              static_cast<double>(b) * static_cast<double>(c);
  double x = n * da * da / (r1 * r2 * c1 * c2);
  // df = 1: p = erfc(sqrt(x/2))
  return std::erfc(std::sqrt(x / 2.0));
}

std::pair<double, double> linear_fit(const double* x, const double* y, int n) {
  if (n < 2) throw std::invalid_argument("linear fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) return {0.0, sy / n};
  double a = (n * sxy - sx * sy) / denom;
  double b = (sy - a * sx) / n;
  return {a, b};
}

}  // namespace lcllab
