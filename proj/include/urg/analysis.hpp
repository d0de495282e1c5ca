// SPDX-License-Identifier: MIT
//
// Closed-form information measures and exponent computations: Renyi entropy,
// the guessing exponent in both its Renyi and variational forms (the latter
// as a grid-certified cross-check), conditional variants, and the LZ
// phrase-count moment predictor E[2^{rho c log2 c}].
#ifndef URG_ANALYSIS_HPP
#define URG_ANALYSIS_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "urg/alphabet.hpp"
#include "urg/empirical.hpp"
#include "urg/guesswork.hpp"
#include "urg/lz78.hpp"
#include "urg/rng.hpp"
#include "urg/sources.hpp"

namespace urg {

namespace detail {
inline void check_distribution(const std::vector<double>& p) {
  double sum = 0;
  for (double v : p) {
    if (v < 0) throw std::invalid_argument("distribution has a negative mass");
    sum += v;
  }
  if (std::fabs(sum - 1) > 1e-9) throw std::invalid_argument("distribution does not sum to 1");
}
}  // namespace detail

// Renyi entropy of order beta != 1, in bits: (1/(1-beta)) log2 sum p^beta.
inline double renyi_entropy(const std::vector<double>& p, double beta) {
  if (beta <= 0 || beta == 1) throw std::invalid_argument("renyi_entropy: order must be > 0, != 1");
  detail::check_distribution(p);
  double s = 0;
  for (double v : p)
    if (v > 0) s += std::pow(v, beta);
  return std::log2(s) / (1 - beta);
}

inline double shannon_entropy(const std::vector<double>& p) {
  detail::check_distribution(p);
  double h = 0;
  for (double v : p)
    if (v > 0) h -= v * std::log2(v);
  return h;
}

namespace detail {

// rho H(Q) - D(Q||P) in bits; -inf when Q puts mass where P has none.
inline double exponent_objective(const std::vector<double>& q, const std::vector<double>& p,
                                 double rho) {
  double h = 0, d = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0) continue;
    if (p[i] <= 0) return -std::numeric_limits<double>::infinity();
    h -= q[i] * std::log2(q[i]);
    d += q[i] * std::log2(q[i] / p[i]);
  }
  return rho * h - d;
}

inline double variational_max_binary(const std::vector<double>& p, double rho) {
  auto f = [&](double q0) {
    return exponent_objective({q0, 1 - q0}, p, rho);
  };
  double best_x = 0, best = f(0);
  for (int i = 1; i <= 200; ++i) {
    double x = i / 200.0;
    double v = f(x);
    if (v > best) best = v, best_x = x;
  }
  double w = 1.0 / 200;
  for (int round = 0; round < 4; ++round) {
    double lo = std::max(0.0, best_x - w), hi = std::min(1.0, best_x + w);
    for (int i = 0; i <= 40; ++i) {
      double x = lo + (hi - lo) * i / 40.0;
      double v = f(x);
      if (v > best) best = v, best_x = x;
    }
    w /= 20;
  }
  return best;
}

inline double variational_max_ternary(const std::vector<double>& p, double rho) {
  auto f = [&](double q0, double q1) {
    double q2 = 1 - q0 - q1;
    if (q2 < 0) return -std::numeric_limits<double>::infinity();
    return exponent_objective({q0, q1, q2}, p, rho);
  };
  double bx = 1.0 / 3, by = 1.0 / 3, best = f(bx, by);
  for (int i = 0; i <= 200; ++i)
    for (int j = 0; j <= 200 - i; ++j) {
      double v = f(i / 200.0, j / 200.0);
      if (v > best) best = v, bx = i / 200.0, by = j / 200.0;
    }
  double w = 1.0 / 200;
  for (int round = 0; round < 4; ++round) {
    double lo0 = std::max(0.0, bx - w), hi0 = std::min(1.0, bx + w);
    double lo1 = std::max(0.0, by - w), hi1 = std::min(1.0, by + w);
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j) {
        double x = lo0 + (hi0 - lo0) * i / 40.0;
        double y = lo1 + (hi1 - lo1) * j / 40.0;
        double v = f(x, y);
        if (v > best) best = v, bx = x, by = y;
      }
    w /= 20;
  }
  return best;
}

}  // namespace detail

// Best-case variational value max_Q [rho H(Q) - D(Q||P)], certified by grid
// search plus local refinement (alphabets of size 2 or 3).
inline double guessing_exponent_variational(const std::vector<double>& p, double rho) {
  detail::check_distribution(p);
  if (p.size() == 2) return detail::variational_max_binary(p, rho);
  if (p.size() == 3) return detail::variational_max_ternary(p, rho);
  throw std::invalid_argument("guessing_exponent_variational: alphabet size must be 2 or 3");
}

// Guessing exponent in bits/symbol: rho * H_{1/(1+rho)}(P), equivalently
// (1+rho) log2 sum_x P(x)^{1/(1+rho)}. For alpha <= 3 the variational form is
// evaluated as well and must agree within 1e-6.
inline double guessing_exponent(const std::vector<double>& p, double rho) {
  if (rho <= 0) throw std::invalid_argument("guessing_exponent: rho must be positive");
  detail::check_distribution(p);
  double s = 0;
  for (double v : p)
    if (v > 0) s += std::pow(v, 1.0 / (1.0 + rho));
  double closed = (1.0 + rho) * std::log2(s);
  if (p.size() <= 3) {
    double grid = guessing_exponent_variational(p, rho);
    if (std::fabs(grid - closed) > 1e-6)
      throw std::logic_error("guessing_exponent: variational and closed forms disagree");
  }
  return closed;
}

// Conditional guessing exponent for a finite joint pmf P(x,y), in bits:
// log2 sum_y [sum_x P(x,y)^{1/(1+rho)}]^{1+rho}, evaluated through the
// maximizing joint Q*(x,y) proportional to P^{1/(1+rho)} qY^{rho/(1+rho)}.
inline double conditional_guessing_exponent(const std::vector<std::vector<double>>& joint,
                                            double rho) {
  if (rho <= 0) throw std::invalid_argument("conditional_guessing_exponent: rho must be positive");
  double total = 0;
  double acc = 0;
  for (const auto& row_x : joint)
    for (double v : row_x) {
      if (v < 0) throw std::invalid_argument("joint pmf has a negative mass");
      total += v;
    }
  if (std::fabs(total - 1) > 1e-9) throw std::invalid_argument("joint pmf does not sum to 1");
  // joint[x][y]; S_y = sum_x P(x,y)^{1/(1+rho)}
  std::size_t ny = joint.empty() ? 0 : joint.front().size();
  for (std::size_t y = 0; y < ny; ++y) {
    double sy = 0;
    for (const auto& row_x : joint) sy += row_x[y] > 0 ? std::pow(row_x[y], 1 / (1 + rho)) : 0.0;
    acc += std::pow(sy, 1 + rho);
  }
  return std::log2(acc);
}

// ---------------------------------------------------------------------------
// LZ phrase-count moment predictor E[2^{rho c(X) log2 c(X)}], with c(X) the
// number of complete phrases in the incremental parse.

struct ClogcEstimate {
  double value;       // the expectation itself
  double exponent;    // (1/n) log2 value
  double std_error;   // 0 for exact enumeration
  MomentMethod method;
};

inline double clogc_term(const Sequence& x, double rho) {
  double c = static_cast<double>(lz78_parse(x).c);
  return c >= 1 ? std::exp2(rho * c * std::log2(c)) : 1.0;
}

inline ClogcEstimate clogc_moment_exact(int alpha, int n, double rho,
                                        const Log2ProbFn& src_log2_prob) {
  std::uint64_t space = sequence_space_size(alpha, n);
  if (space > kListGuard) throw std::invalid_argument("enumeration guard exceeded");
  double value = 0;
  Sequence x(alpha);
  for (int i = 0; i < n; ++i) x.syms.push_back(0);
  do {
    double px = std::exp2(src_log2_prob(x));
    if (px > 0) value += px * clogc_term(x, rho);
  } while (next_sequence(x));
  return ClogcEstimate{value, std::log2(value) / n, 0.0, MomentMethod::exact_enumeration};
}

inline ClogcEstimate clogc_moment_monte_carlo(
    const std::function<Sequence(RandomStream&)>& draw, int n, double rho, std::uint64_t trials,
    std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("clogc_moment_monte_carlo: need >= 2 trials");
  double sum = 0, sumsq = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    RandomStream rng(RandomStream::derive(seed, t));
    double v = clogc_term(draw(rng), rho);
    sum += v;
    sumsq += v * v;
  }
  double mean = sum / static_cast<double>(trials);
  double var = std::max(0.0, sumsq / static_cast<double>(trials) - mean * mean);
  double se = std::sqrt(var / static_cast<double>(trials - 1));
  return ClogcEstimate{mean, std::log2(mean) / n, se, MomentMethod::monte_carlo};
}

// One row of an exponent sweep: a strategy's measured (1/n) log2 moment next
// to the memoryless theory value (NaN when no closed form applies).
struct ExponentCell {
  std::string strategy;
  int n;
  double rho;
  double measured;  // (1/n) log2 E{G^rho} (or predictor exponent)
  double theory;    // guessing exponent, bits/symbol; NaN if not memoryless
  double gap;       // measured - theory
};

}  // namespace urg

#endif  // URG_ANALYSIS_HPP
