// SPDX-License-Identifier: MIT
//
// Statistical checks used by the experiment suites: two-sample
// Kolmogorov-Smirnov with the asymptotic rejection threshold, and a
// chi-square goodness-of-fit test with its p-value via the regularized
// incomplete gamma function.
#ifndef URG_STATS_HPP
#define URG_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace urg {

struct KsResult {
  double statistic;  // sup |F1 - F2|
  double threshold;  // c(q) sqrt((n1+n2)/(n1 n2))
  bool reject;       // statistic > threshold
};

// Asymptotic two-sample KS coefficient c(q) = sqrt(-ln(q/2)/2).
inline double ks_coefficient(double significance) {
  if (significance <= 0 || significance >= 1)
    throw std::invalid_argument("ks_coefficient: significance must be in (0,1)");
  return std::sqrt(-std::log(significance / 2) / 2);
}

inline KsResult ks_two_sample(std::vector<double> a, std::vector<double> b, double significance) {
  if (a.size() < 2 || b.size() < 2) throw std::invalid_argument("ks_two_sample: samples too small");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0;
  std::size_t i = 0, j = 0;
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  while (i < a.size() && j < b.size()) {
    double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  double threshold = ks_coefficient(significance) * std::sqrt((na + nb) / (na * nb));
  return KsResult{d, threshold, d > threshold};
}

namespace detail {

// Regularized lower incomplete gamma P(s, x); series for x < s+1, continued
// fraction for the complement otherwise.
inline double gamma_p(double s, double x) {
  if (s <= 0 || x < 0) throw std::invalid_argument("gamma_p: bad arguments");
  if (x == 0) return 0;
  if (x < s + 1) {  // series: P = x^s e^{-x} / Gamma(s) * sum x^k / (s)_{k+1}
    double term = 1.0 / s, sum = term;
    for (int k = 1; k < 10000; ++k) {
      term *= x / (s + k);
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
  }
  // Lentz continued fraction for Q(s, x)
  double b = x + 1 - s, c = 1e300, d = 1 / b, h = d;
  for (int k = 1; k < 10000; ++k) {
    double an = -static_cast<double>(k) * (k - s);
    b += 2;
    d = an * d + b;
    if (std::fabs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::fabs(c) < 1e-300) c = 1e-300;
    d = 1 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1) < 1e-16) break;
  }
  double q = std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
  return 1 - q;
}

}  // namespace detail

struct ChiSquareResult {
  double statistic;
  int dof;
  double p_value;  // upper tail: P(X >= statistic)
};

// Goodness of fit of observed counts against expected probabilities.
inline ChiSquareResult chi_square_gof(const std::vector<std::uint64_t>& counts,
                                      const std::vector<double>& expected_probs) {
  if (counts.size() != expected_probs.size() || counts.size() < 2)
    throw std::invalid_argument("chi_square_gof: shape mismatch");
  double total = 0;
  for (std::uint64_t c : counts) total += static_cast<double>(c);
  double stat = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    double e = total * expected_probs[i];
    if (e <= 0) throw std::invalid_argument("chi_square_gof: expected cell is zero");
    double diff = static_cast<double>(counts[i]) - e;
    stat += diff * diff / e;
  }
  int dof = static_cast<int>(counts.size()) - 1;
  double p = 1 - detail::gamma_p(dof / 2.0, stat / 2);
  return ChiSquareResult{stat, dof, p};
}

}  // namespace urg

#endif  // URG_STATS_HPP
