// SPDX-License-Identifier: MIT
//
// Real special functions needed by the geometric guess-count moments:
// Riemann zeta on the real line (Euler-Maclaurin + functional equation),
// Eulerian-number closed forms for Li_{-m} at integer m, and the small-mu
// asymptotic expansion of Li_{-rho}(e^{-mu}) for non-integer rho.
#ifndef URG_POLYLOG_HPP
#define URG_POLYLOG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace urg {
namespace detail {

// Euler-Maclaurin tail coefficients B_{2k} for k = 1..10.
inline constexpr double kBernoulli2k[10] = {
    1.0 / 6,      -1.0 / 30,        1.0 / 42, -1.0 / 30,        5.0 / 66,
    -691.0 / 2730, 7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330};

// zeta(s) for real s > 1 via a 64-term Dirichlet sum plus Euler-Maclaurin
// correction; relative error < 1e-15 on s >= 1 + 1e-7.
inline double zeta_right_half(double s) {
  constexpr int N = 64;
  double sum = 0;
  for (int n = 1; n < N; ++n) sum += std::pow(static_cast<double>(n), -s);
  const double nns = std::pow(static_cast<double>(N), -s);
  sum += 0.5 * nns;
  sum += nns * N / (s - 1);  // N^{1-s}/(s-1)
  double rising = s;         // s (s+1) ... (s+2k-2)
  double npow = nns / N;     // N^{-s-1}, then N^{-s-2k+1}
  double fact = 2;           // (2k)!
  for (int k = 1; k <= 10; ++k) {
    sum += kBernoulli2k[k - 1] / fact * rising * npow;
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    npow /= static_cast<double>(N) * N;
    fact *= (2 * k + 1) * (2 * k + 2);
  }
  return sum;
}

}  // namespace detail

// zeta(s) for real s != 1; s <= 0 goes through the functional equation
// zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s).
inline double riemann_zeta(double s) {
  if (s == 1) throw std::invalid_argument("riemann_zeta: pole at s = 1");
  if (s > 1) return detail::zeta_right_half(s);
  if (s == 0) return -0.5;
  if (s > 0) {  // 0 < s < 1: functional equation still applies
    return std::pow(2.0, s) * std::pow(std::numbers::pi, s - 1) *
           std::sin(std::numbers::pi * s / 2) * std::tgamma(1 - s) *
           detail::zeta_right_half(1 - s);
  }
  // negative s: trivial zeros at even integers
  double half = -s / 2;
  if (half == std::floor(half)) return 0.0;
  return std::pow(2.0, s) * std::pow(std::numbers::pi, s - 1) *
         std::sin(std::numbers::pi * s / 2) * std::tgamma(1 - s) *
         detail::zeta_right_half(1 - s);
}

namespace detail {

// Row m of the Eulerian triangle A(m, 0..m-1).
inline std::vector<double> eulerian_row(int m) {
  std::vector<double> row{1.0};  // m = 1
  for (int n = 2; n <= m; ++n) {
    std::vector<double> next(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
      double left = k < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(k)] : 0.0;
      double up = k >= 1 && k - 1 < static_cast<int>(row.size())
                      ? row[static_cast<std::size_t>(k - 1)]
                      : 0.0;
      next[static_cast<std::size_t>(k)] = (k + 1) * left + (n - k) * up;
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace detail

// Li_{-m}(q) for integer m >= 0 and q in (0,1):
// Li_{-m}(q) = (1-q)^{-(m+1)} sum_j A(m,j) q^{m-j} (m >= 1), Li_0 = q/(1-q).
inline double polylog_neg_int(int m, double q) {
  if (m < 0 || q <= 0 || q >= 1) throw std::invalid_argument("polylog_neg_int: bad arguments");
  if (m == 0) return q / (1 - q);
  if (m > 150) throw std::invalid_argument("polylog_neg_int: order too large");
  std::vector<double> row = detail::eulerian_row(m);
  double poly = 0;
  for (int j = 0; j < m; ++j)
    poly += row[static_cast<std::size_t>(j)] * std::pow(q, static_cast<double>(m - j));
  return poly * std::pow(1 - q, -(m + 1.0));
}

struct PolylogExpansion {
  double value;
  double error_bound;  // magnitude of the first omitted correction term
};

// Li_{-rho}(e^{-mu}) for non-integer rho > 0 and small mu > 0 via
//   Gamma(1+rho) mu^{-1-rho} + sum_{k>=0} zeta(-rho-k) (-mu)^k / k!.
// The series converges for mu < 2*pi; callers keep mu <= 0.5 where the
// truncation bound below is sound.
inline PolylogExpansion polylog_neg_expansion(double rho, double mu) {
  if (mu <= 0 || mu > 0.5) throw std::invalid_argument("polylog_neg_expansion: mu out of range");
  if (rho <= 0 || rho > 150) throw std::invalid_argument("polylog_neg_expansion: rho out of range");
  double value = std::tgamma(1 + rho) * std::pow(mu, -1 - rho);
  double mu_pow_over_fact = 1.0;  // mu^k / k!
  double last = 0;
  int small_streak = 0;
  for (int k = 0; k <= 80; ++k) {
    double term = riemann_zeta(-rho - k) * mu_pow_over_fact * (k % 2 ? -1.0 : 1.0);
    value += term;
    last = std::fabs(term);
    small_streak = last <= 1e-17 * std::fabs(value) ? small_streak + 1 : 0;
    if (small_streak >= 2) break;
    mu_pow_over_fact *= mu / (k + 1);
  }
  return PolylogExpansion{value, last + 1e-16 * std::fabs(value)};
}

}  // namespace urg

#endif  // URG_POLYLOG_HPP
