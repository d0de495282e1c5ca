// SPDX-License-Identifier: MIT
//
// Method-of-types machinery: symbol counts, empirical entropies (plain,
// joint, conditional) and the universal weight 2^{-n Hhat(x)} with its exact
// normalization bounds. Entropies are evaluated from integer counts through a
// shared log2 table so equal types give bit-identical values — downstream
// rank ties must break deterministically.
#ifndef URG_EMPIRICAL_HPP
#define URG_EMPIRICAL_HPP

#include <cmath>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "urg/alphabet.hpp"

namespace urg {

// log2(k) for integer k, from a lazily grown shared table; log2_int(0) = 0 so
// 0*log2(0) terms vanish by construction.
inline double log2_int(int k) {
  static std::vector<double> table{0.0, 0.0};  // [0] serves the 0*log2(0)=0 convention
  static std::mutex mu;
  if (k < 0) throw std::invalid_argument("log2_int: negative argument");
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= k)
    table.push_back(std::log2(static_cast<double>(table.size())));
  return table[static_cast<std::size_t>(k)];
}

struct EmpiricalDist {
  std::vector<int> counts;
  int n = 0;

  static EmpiricalDist of(const Sequence& x) {
    EmpiricalDist d;
    d.counts.assign(x.alpha, 0);
    for (std::uint8_t s : x.syms) ++d.counts[s];
    d.n = x.n();
    return d;
  }
};

struct JointEmpiricalDist {
  std::vector<int> counts;  // row-major [x][y]
  int alpha_x = 0, alpha_y = 0;
  int n = 0;

  static JointEmpiricalDist of(const Sequence& x, const Sequence& y) {
    if (x.n() != y.n()) throw std::invalid_argument("joint counts: length mismatch");
    JointEmpiricalDist d;
    d.alpha_x = x.alpha;
    d.alpha_y = y.alpha;
    d.counts.assign(static_cast<std::size_t>(x.alpha) * y.alpha, 0);
    for (int i = 0; i < x.n(); ++i)
      ++d.counts[static_cast<std::size_t>(x[i]) * y.alpha + y[i]];
    d.n = x.n();
    return d;
  }

  int at(int xs, int ys) const {
    return counts[static_cast<std::size_t>(xs) * alpha_y + ys];
  }
};

// H of a count vector in bits per symbol: log2(n) - (1/n) sum c*log2(c).
inline double entropy_of_counts(const std::vector<int>& counts, int n) {
  if (n < 1) throw std::invalid_argument("entropy: empty sample");
  double s = 0;
  for (int c : counts) s += c * log2_int(c);
  return log2_int(n) - s / n;
}

inline double empirical_entropy(const Sequence& x) {
  EmpiricalDist d = EmpiricalDist::of(x);
  return entropy_of_counts(d.counts, d.n);
}

// Hhat(X|Y) = H(joint) - H(y-marginal), in bits per symbol.
inline double conditional_empirical_entropy(const Sequence& x, const Sequence& y) {
  if (x.n() != y.n())
    throw std::invalid_argument("conditional_empirical_entropy: length mismatch");
  if (x.n() < 1) throw std::invalid_argument("conditional_empirical_entropy: empty sample");
  JointEmpiricalDist j = JointEmpiricalDist::of(x, y);
  EmpiricalDist ym = EmpiricalDist::of(y);
  return entropy_of_counts(j.counts, j.n) - entropy_of_counts(ym.counts, ym.n);
}

// log2 of the (unnormalized) universal weight: -n * Hhat(x)
//   = sum_a c_a log2 c_a - n log2 n.
inline double universal_weight(const Sequence& x) {
  if (x.n() < 1) throw std::invalid_argument("universal_weight: empty sequence");
  return -static_cast<double>(x.n()) * empirical_entropy(x);
}

// log2 of the conditional weight: -n * Hhat(X|Y).
inline double conditional_universal_weight(const Sequence& x, const Sequence& y) {
  return -static_cast<double>(x.n()) * conditional_empirical_entropy(x, y);
}

inline constexpr int kEnumerationMaxAlpha = 3;
inline constexpr int kEnumerationMaxN = 14;

struct UniversalDist {
  int alpha = 2, n = 0;
  double normalizer = 0;        // Z_n = sum_x 2^{-n Hhat(x)}
  std::vector<double> probs;    // P(x) over X^n in lexicographic order
};

// Exact (by exhaustive enumeration) normalized universal distribution.
inline UniversalDist universal_dist_exact(int alpha, int n) {
  if (alpha < 2 || alpha > kEnumerationMaxAlpha || n < 1 || n > kEnumerationMaxN)
    throw std::invalid_argument("universal_dist_exact: guard is alpha <= 3, 1 <= n <= 14");
  UniversalDist d;
  d.alpha = alpha;
  d.n = n;
  std::uint64_t total = sequence_space_size(alpha, n);
  d.probs.resize(total);
  Sequence x(alpha);
  x.syms.assign(static_cast<std::size_t>(n), 0);
  std::uint64_t idx = 0;
  do {
    double w = std::exp2(universal_weight(x));
    d.probs[idx++] = w;
    d.normalizer += w;
  } while (next_sequence(x));
  for (double& p : d.probs) p /= d.normalizer;
  return d;
}

// Exact integer form of the normalizer: Z_n = (sum over types of
// multinomial(n; c) * prod_a c_a^{c_a}) / n^n. Both values fit in uint64 for
// alpha <= 3, n <= 14. Returned as (numerator, denominator).
struct ExactNormalizer {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;
};

namespace detail {
inline std::uint64_t ipow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}
inline std::uint64_t binomial_u64(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}
}  // namespace detail

inline ExactNormalizer universal_normalizer_exact(int alpha, int n) {
  if (alpha < 2 || alpha > kEnumerationMaxAlpha || n < 1 || n > kEnumerationMaxN)
    throw std::invalid_argument("universal_normalizer_exact: guard is alpha <= 3, 1 <= n <= 14");
  ExactNormalizer z;
  z.denominator = detail::ipow_u64(static_cast<std::uint64_t>(n), n);
  auto term = [&](const std::vector<int>& c) {
    std::uint64_t multinomial = 1;
    int rest = n;
    for (int a = 0; a < alpha; ++a) {
      multinomial *= detail::binomial_u64(rest, c[static_cast<std::size_t>(a)]);
      rest -= c[static_cast<std::size_t>(a)];
    }
    std::uint64_t w = 1;  // prod c_a^{c_a}; 0^0 = 1
    for (int a = 0; a < alpha; ++a)
      w *= detail::ipow_u64(static_cast<std::uint64_t>(c[static_cast<std::size_t>(a)]),
                            c[static_cast<std::size_t>(a)]);
    z.numerator += multinomial * w;
  };
  std::vector<int> c(static_cast<std::size_t>(alpha), 0);
  if (alpha == 2) {
    for (int c0 = 0; c0 <= n; ++c0) {
      c[0] = c0;
      c[1] = n - c0;
      term(c);
    }
  } else {
    for (int c0 = 0; c0 <= n; ++c0)
      for (int c1 = 0; c1 + c0 <= n; ++c1) {
        c[0] = c0;
        c[1] = c1;
        c[2] = n - c0 - c1;
        term(c);
      }
  }
  return z;
}

}  // namespace urg

#endif  // URG_EMPIRICAL_HPP
