// SPDX-License-Identifier: MIT
//
// Guesswork moments and tails: deterministic-list oracles over X^n, exact
// randomized-guessing moments through the geometric law, the normalized
// series bound on moment growth, double-exponential concentration, and the
// asynchronous multi-agent attack simulator.
#ifndef URG_GUESSWORK_HPP
#define URG_GUESSWORK_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "urg/alphabet.hpp"
#include "urg/empirical.hpp"
#include "urg/lz78.hpp"
#include "urg/polylog.hpp"
#include "urg/rng.hpp"

namespace urg {

// Guessing-list orderings; ties always break lexicographically.
enum class Ordering { probability_desc, entropy_asc, lz_length_asc };

inline const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::probability_desc: return "exact-probability-desc";
    case Ordering::entropy_asc: return "empirical-entropy-asc";
    case Ordering::lz_length_asc: return "lz-length-asc";
  }
  return "?";
}

enum class MomentMethod { exact_enumeration, truncated_series, monte_carlo };

inline const char* moment_method_name(MomentMethod m) {
  switch (m) {
    case MomentMethod::exact_enumeration: return "exact-enumeration";
    case MomentMethod::truncated_series: return "truncated-series";
    case MomentMethod::monte_carlo: return "monte-carlo";
  }
  return "?";
}

struct MomentResult {
  double value;
  MomentMethod method;
  double error_bound;  // absolute
  double rho;
};

using Log2ProbFn = std::function<double(const Sequence&)>;

inline constexpr std::uint64_t kListGuard = 4782969;  // 3^14 sequences

namespace detail {

inline double ordering_key(Ordering ord, const Sequence& x, const Log2ProbFn& src_log2_prob) {
  switch (ord) {
    case Ordering::probability_desc: return -src_log2_prob(x);  // ascending key
    case Ordering::entropy_asc: return empirical_entropy(x);
    case Ordering::lz_length_asc: return static_cast<double>(lz_code_length(x));
  }
  throw std::logic_error("ordering_key: unreachable");
}

// Ranks (1-based) of every sequence of X^n in lexicographic enumeration
// order, under the given ordering with lexicographic tie-break.
inline std::vector<std::uint32_t> list_ranks(int alpha, int n, Ordering ord,
                                             const Log2ProbFn& src_log2_prob) {
  std::uint64_t space = sequence_space_size(alpha, n);
  if (space > kListGuard) throw std::invalid_argument("list enumeration guard exceeded");
  std::vector<double> keys;
  keys.reserve(space);
  Sequence x(alpha);
  for (int i = 0; i < n; ++i) x.syms.push_back(0);
  do {
    keys.push_back(ordering_key(ord, x, src_log2_prob));
  } while (next_sequence(x));
  std::vector<std::uint32_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  std::vector<std::uint32_t> rank(keys.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r + 1;
  return rank;
}

}  // namespace detail

// The full guessing list, best guess first.
inline std::vector<Sequence> guessing_list(int alpha, int n, Ordering ord,
                                           const Log2ProbFn& src_log2_prob) {
  std::vector<std::uint32_t> rank = detail::list_ranks(alpha, n, ord, src_log2_prob);
  std::vector<Sequence> list(rank.size(), Sequence(alpha));
  Sequence x(alpha);
  for (int i = 0; i < n; ++i) x.syms.push_back(0);
  std::size_t idx = 0;
  do {
    list[rank[idx] - 1] = x;
    ++idx;
  } while (next_sequence(x));
  return list;
}

// E{G^rho} for the deterministic list: sum_x P(x) rank(x)^rho, exactly.
inline MomentResult list_moment(int alpha, int n, double rho, Ordering ord,
                                const Log2ProbFn& src_log2_prob) {
  if (rho <= 0) throw std::invalid_argument("list_moment: rho must be positive");
  std::vector<std::uint32_t> rank = detail::list_ranks(alpha, n, ord, src_log2_prob);
  double value = 0;
  Sequence x(alpha);
  for (int i = 0; i < n; ++i) x.syms.push_back(0);
  std::size_t idx = 0;
  do {
    value += std::exp2(src_log2_prob(x)) * std::pow(static_cast<double>(rank[idx]), rho);
    ++idx;
  } while (next_sequence(x));
  return MomentResult{value, MomentMethod::exact_enumeration, 0.0, rho};
}

// ---------------------------------------------------------------------------
// E{G^rho} for a geometric guess count: sum_{k>=1} k^rho (1-p)^{k-1} p.
//
// Three evaluation routes, all reporting an error bound:
//  - integer rho: Eulerian closed form of Li_{-m}, no truncation;
//  - moderate p: direct series; term ratios q((k+1)/k)^rho decrease in k, so
//    once the ratio bound r < 1 the tail is <= t_{k+1}/(1-r), and we stop
//    when that bound drops below rel_tol * partial_sum;
//  - tiny p (series would need > ~2e6 terms): asymptotic expansion of
//    Li_{-rho}(e^{-mu}) around mu = -ln(1-p) -> 0.
inline MomentResult geometric_moment(double p, double rho, double rel_tol = 1e-12) {
  if (!(p > 0) || p > 1) throw std::invalid_argument("geometric_moment: need 0 < p <= 1");
  if (rho < 0) throw std::invalid_argument("geometric_moment: rho must be >= 0");
  if (rel_tol <= 0 || rel_tol > 0.1)
    throw std::invalid_argument("geometric_moment: rel_tol out of range");
  if (p == 1) return MomentResult{1.0, MomentMethod::truncated_series, 0.0, rho};
  const double q = 1 - p;

  double rounded = std::round(rho);
  if (std::fabs(rho - rounded) < 1e-9 && rounded <= 150) {
    // Eulerian closed form evaluated with p directly (recovering 1-q from q
    // would lose all precision for tiny p):
    // E = sum_j A(m,j) q^{m-j} / (q p^m).
    int m = static_cast<int>(rounded);
    if (m == 0) return MomentResult{1.0, MomentMethod::truncated_series, 0.0, rho};
    std::vector<double> row = detail::eulerian_row(m);
    double poly = 0;
    for (int j = 0; j < m; ++j)
      poly += row[static_cast<std::size_t>(j)] * std::pow(q, static_cast<double>(m - j));
    double value = poly / (q * std::pow(p, static_cast<double>(m)));
    return MomentResult{value, MomentMethod::truncated_series, 1e-14 * value, rho};
  }
  if (rho > 150) throw std::invalid_argument("geometric_moment: rho too large for non-integer path");

  const double mu = -std::log1p(-p);  // -ln q
  if ((rho + 40) / mu <= 2e6) {       // direct series is affordable
    double sum = 0, t = p;
    for (std::uint64_t k = 1;; ++k) {
      sum += t;
      double tn = t * q * std::pow((k + 1.0) / k, rho);
      double r = q * std::pow((k + 2.0) / (k + 1.0), rho);  // >= all later ratios
      if (r < 1) {
        double tail = tn / (1 - r);
        if (tail <= rel_tol * sum)
          return MomentResult{sum, MomentMethod::truncated_series, tail, rho};
      }
      t = tn;
      if (k > 4000000) throw std::runtime_error("geometric_moment: series budget exceeded");
    }
  }
  PolylogExpansion li = polylog_neg_expansion(rho, mu);
  return MomentResult{(p / q) * li.value, MomentMethod::truncated_series,
                      (p / q) * li.error_bound, rho};
}

// E{G^rho} when each guess is an i.i.d. draw from the strategy: given x the
// guess count is geometric with success probability P~(x), so
// E{G^rho} = sum_x P(x) * geometric_moment(P~(x), rho).
inline MomentResult randomized_strategy_moment(int alpha, int n, double rho,
                                               const Log2ProbFn& src_log2_prob,
                                               const Log2ProbFn& strategy_log2_prob,
                                               double rel_tol = 1e-12) {
  if (rho <= 0) throw std::invalid_argument("randomized_strategy_moment: rho must be positive");
  std::uint64_t space = sequence_space_size(alpha, n);
  if (space > kListGuard) throw std::invalid_argument("enumeration guard exceeded");
  double value = 0, err = 0;
  Sequence x(alpha);
  for (int i = 0; i < n; ++i) x.syms.push_back(0);
  do {
    double px = std::exp2(src_log2_prob(x));
    if (px > 0) {
      MomentResult g = geometric_moment(std::exp2(strategy_log2_prob(x)), rho, rel_tol);
      value += px * g.value;
      err += px * g.error_bound;
    }
  } while (next_sequence(x));
  return MomentResult{value, MomentMethod::exact_enumeration, err, rho};
}

inline bool strategy_match(const Sequence& a, const Sequence& b) {
  return a.alpha == b.alpha && a.syms == b.syms;
}

// Monte Carlo variant: draws x ~ source, then literally counts i.i.d. guesses
// until a match, averaging G^rho across trials.
struct MonteCarloMoment {
  double value;
  double std_error;
  std::uint64_t trials;
  std::uint64_t capped;  // trials stopped at the guess cap (bias warning if > 0)
};

inline MonteCarloMoment randomized_moment_monte_carlo(
    const std::function<Sequence(RandomStream&)>& draw_secret,
    const std::function<Sequence(RandomStream&)>& draw_guess, double rho, std::uint64_t trials,
    std::uint64_t seed, std::uint64_t guess_cap = 1000000) {
  if (trials < 2) throw std::invalid_argument("randomized_moment_monte_carlo: need >= 2 trials");
  double sum = 0, sumsq = 0;
  std::uint64_t capped = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    RandomStream rng(RandomStream::derive(seed, t));
    Sequence secret = draw_secret(rng);
    std::uint64_t g = 0;
    for (;;) {
      ++g;
      if (strategy_match(draw_guess(rng), secret)) break;
      if (g >= guess_cap) {
        ++capped;
        break;
      }
    }
    double v = std::pow(static_cast<double>(g), rho);
    sum += v;
    sumsq += v * v;
  }
  double mean = sum / static_cast<double>(trials);
  double var = std::max(0.0, sumsq / static_cast<double>(trials) - mean * mean);
  double se = std::sqrt(var / static_cast<double>(trials - 1));
  return MonteCarloMoment{mean, se, trials, capped};
}

// ---------------------------------------------------------------------------
// Concentration of the randomized guess count.

// ln of (1-p)^{k-1}: the exact probability that k-1 i.i.d. guesses all miss.
inline double concentration_tail_log(double p, std::uint64_t k) {
  if (!(p > 0) || p > 1 || k < 1) throw std::invalid_argument("concentration_tail_log: bad args");
  return static_cast<double>(k - 1) * std::log1p(-p);
}

struct ConcentrationCheck {
  double p;            // per-guess success probability 2^{-n Hhat(x)}
  std::uint64_t k;     // threshold ceil(2^{n (Hhat + eps)})
  double log_tail;     // ln P(G > k-1 misses)
  double log_bound;    // ln of the double-exponential bound = -2^{n eps}
  bool holds;
};

// Tail of the guess count past 2^{n(Hhat+eps)} when guessing x with success
// probability 2^{-n Hhat(x)}: compares against exp(-2^{n eps}) in log domain.
inline ConcentrationCheck concentration_check(const Sequence& x, double eps) {
  if (eps <= 0) throw std::invalid_argument("concentration_check: eps must be positive");
  const int n = x.n();
  double hhat = empirical_entropy(x);
  double p = std::exp2(-static_cast<double>(n) * hhat);
  double kd = std::ceil(std::exp2(n * (hhat + eps)));
  if (kd > 9e18) throw std::invalid_argument("concentration_check: threshold overflows");
  std::uint64_t k = static_cast<std::uint64_t>(kd);
  double log_tail = concentration_tail_log(p, k);
  double log_bound = -std::exp2(n * eps);
  return ConcentrationCheck{p, k, log_tail, log_bound, log_tail <= log_bound};
}

// ---------------------------------------------------------------------------
// Series bound S(a, rho, n) = sum_k k^rho (1 - e^{-na})^{k-1} and its
// normalized log gap to (1+rho) a, which must vanish as n grows.

struct SeriesBoundResult {
  double S;
  double gap;  // (1/n) ln S - (1+rho) a, in nats
  MomentResult moment;
};

inline SeriesBoundResult series_bound_check(double a, double rho, int n) {
  if (a < 0 || rho <= 0 || n < 1) throw std::invalid_argument("series_bound_check: bad arguments");
  if (n * a > 40) throw std::invalid_argument("series_bound_check: na > 40 not supported");
  if (a == 0) {
    // q = 0: only k = 1 survives
    return SeriesBoundResult{1.0, 0.0, MomentResult{1.0, MomentMethod::truncated_series, 0.0, rho}};
  }
  const double p = std::exp(-static_cast<double>(n) * a);
  if (rho == 1.0) {
    // closed form S = p^{-2}, so (1/n) ln S = 2a identically and the gap is 0
    double S = 1.0 / (p * p);
    return SeriesBoundResult{S, 0.0, MomentResult{S * p, MomentMethod::truncated_series, 0.0, rho}};
  }
  MomentResult m = geometric_moment(p, rho, 1e-12);
  double S = m.value / p;
  double gap = std::log(S) / n - (1 + rho) * a;
  return SeriesBoundResult{S, gap, m};
}

// ---------------------------------------------------------------------------
// Asynchronous decentralized attack: K agents draw i.i.d. guesses from their
// own derived RNG streams and submit them round-robin; with replacement, so
// the pooled total-query law does not depend on K.

struct AttackTrace {
  std::uint64_t total_queries = 0;
  std::vector<std::uint64_t> per_agent;
  std::uint64_t rounds = 0;  // wall-clock proxy: ceil(total / K)
  bool success = false;
};

inline AttackTrace simulate_attack(const Sequence& secret,
                                   const std::function<Sequence(RandomStream&)>& guess,
                                   int agents, std::uint64_t seed, std::uint64_t max_queries) {
  if (agents < 1) throw std::invalid_argument("simulate_attack: need at least one agent");
  if (max_queries < 1) throw std::invalid_argument("simulate_attack: need a positive budget");
  std::vector<RandomStream> streams;
  streams.reserve(static_cast<std::size_t>(agents));
  for (int i = 0; i < agents; ++i)
    streams.emplace_back(RandomStream::derive(seed, static_cast<std::uint64_t>(i)));
  AttackTrace trace;
  trace.per_agent.assign(static_cast<std::size_t>(agents), 0);
  bool done = false;
  while (!done) {
    for (int i = 0; i < agents && !done; ++i) {
      Sequence g = guess(streams[static_cast<std::size_t>(i)]);
      ++trace.per_agent[static_cast<std::size_t>(i)];
      ++trace.total_queries;
      if (strategy_match(g, secret)) {
        trace.success = true;
        done = true;
      } else if (trace.total_queries >= max_queries) {
        done = true;
      }
    }
  }
  trace.rounds = (trace.total_queries + static_cast<std::uint64_t>(agents) - 1) /
                 static_cast<std::uint64_t>(agents);
  return trace;
}

}  // namespace urg

#endif  // URG_GUESSWORK_HPP
