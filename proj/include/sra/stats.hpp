#pragma once
// Empirical-distribution utilities: empirical CDFs, the Kolmogorov-Smirnov
// sup-distance against an analytic law, and moment estimators.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace sra {

// Right-continuous empirical CDF over a finite sample.
class EmpiricalCdf {
 public:
  // Sorts a copy of the samples. Throws std::invalid_argument on an empty or
  // non-finite input.
  explicit EmpiricalCdf(std::vector<double> samples);

  // (# samples <= x) / n by binary search.
  double operator()(double x) const;

  // Smallest sample value v with F(v) >= p, for p in [0,1].
  double quantile(double p) const;

  std::span<const double> sorted() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

// Two-sided KS statistic against a nondecreasing law F mapping into [0,1]:
//   D = max_i max(|i/n - F(x_(i))|, |(i-1)/n - F(x_(i))|)
// over the sorted sample points, the exact sup for step functions.
template <typename Law>
double ks_distance(const EmpiricalCdf& cdf, Law&& law) {
  const auto xs = cdf.sorted();
  const double n = static_cast<double>(xs.size());
  double dist = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = law(xs[i]);
    const double hi = (static_cast<double>(i) + 1.0) / n - f;
    const double lo = f - static_cast<double>(i) / n;
    dist = std::max({dist, hi, lo});
  }
  return dist;
}

struct Moments {
  double mean = 0.0;
  double variance = 0.0;   // unbiased, n-1 denominator
  double std_error = 0.0;  // sqrt(variance / n)
};

// One-pass Welford recursion; stable for large n with small variance.
// Throws std::invalid_argument for n < 2.
Moments sample_moments(std::span<const double> samples);

}  // namespace sra
