// SPDX-License-Identifier: MIT
//
// Dirichlet(1/2) add-half sequential estimator ("add-half mixture"): sequential
// conditionals, the log-gamma closed form of the whole-sequence probability,
// exact integer-arithmetic sampling, and the side-information variant that
// keeps separate counts per SI symbol (buckets created lazily).
#ifndef URG_KT_HPP
#define URG_KT_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "urg/alphabet.hpp"
#include "urg/rng.hpp"

namespace urg {

// Running counts for the plain mixture.
class MixtureState {
 public:
  explicit MixtureState(int alpha) : counts_(static_cast<std::size_t>(alpha), 0) {}

  int alpha() const { return static_cast<int>(counts_.size()); }
  int t() const { return t_; }
  int count(int sym) const { return counts_[static_cast<std::size_t>(sym)]; }

  // (count(next) + 1/2) / (t + alpha/2)
  double conditional(int next) const {
    return (count(next) + 0.5) / (t_ + 0.5 * alpha());
  }

  void observe(int sym) {
    ++counts_[static_cast<std::size_t>(sym)];
    ++t_;
  }

  // Exact draw: P(sym) = (2*count + 1) / (2t + alpha), all integers.
  int draw(RandomStream& rng) const {
    std::uint64_t den = 2ULL * static_cast<std::uint64_t>(t_) + alpha();
    std::uint64_t u = rng.next_below(den);
    std::uint64_t acc = 0;
    for (int a = 0; a < alpha(); ++a) {
      acc += 2ULL * static_cast<std::uint64_t>(count(a)) + 1;
      if (u < acc) return a;
    }
    return alpha() - 1;  // unreachable: acc ends at den
  }

 private:
  std::vector<int> counts_;
  int t_ = 0;
};

inline double kt_conditional(const MixtureState& state, int next) {
  return state.conditional(next);
}

// Sequential product of add-half conditionals, in log2.
inline double kt_sequence_log_prob(const Sequence& x) {
  if (x.n() < 1) throw std::invalid_argument("kt_sequence_log_prob: empty sequence");
  MixtureState st(x.alpha);
  double lp = 0;
  for (std::uint8_t s : x.syms) {
    lp += std::log2(st.conditional(s));
    st.observe(s);
  }
  return lp;
}

// Closed form of the same probability:
//   M(x) = Gamma(alpha/2) * prod_a Gamma(c_a + 1/2) / (Gamma(1/2)^alpha * Gamma(n + alpha/2))
// evaluated through lgamma in log2.
inline double kt_closed_form_log_prob(const Sequence& x) {
  if (x.n() < 1) throw std::invalid_argument("kt_closed_form_log_prob: empty sequence");
  const int alpha = x.alpha;
  std::vector<int> counts(static_cast<std::size_t>(alpha), 0);
  for (std::uint8_t s : x.syms) ++counts[s];
  double ln = std::lgamma(0.5 * alpha) - alpha * std::lgamma(0.5) -
              std::lgamma(x.n() + 0.5 * alpha);
  for (int c : counts) ln += std::lgamma(c + 0.5);
  return ln / std::numbers::ln2_v<double>;
}

// Draw a length-n sequence; the induced law is exactly the mixture law.
inline Sequence kt_sample(int alpha, int n, RandomStream& rng) {
  if (n < 1) throw std::invalid_argument("kt_sample: n must be >= 1");
  Sequence out(alpha);
  out.syms.reserve(static_cast<std::size_t>(n));
  MixtureState st(alpha);
  for (int t = 0; t < n; ++t) {
    int s = st.draw(rng);
    st.observe(s);
    out.syms.push_back(static_cast<std::uint8_t>(s));
  }
  return out;
}

// Side-information variant: separate joint counts per SI symbol. The step-t
// conditional for x given the SI letter y is
//   (joint_count(x, y) + 1/2) / (marginal_count(y) + alpha/2).
class CondMixtureState {
 public:
  CondMixtureState(int alpha_x, int alpha_y)
      : alpha_x_(alpha_x), alpha_y_(alpha_y) {}

  int joint_count(int x, int y) const {
    auto it = buckets_.find(y);
    if (it == buckets_.end()) return 0;
    return it->second[static_cast<std::size_t>(x)];
  }
  int y_count(int y) const {
    auto it = ycounts_.find(y);
    return it == ycounts_.end() ? 0 : it->second;
  }

  double conditional(int next_x, int y_now) const {
    return (joint_count(next_x, y_now) + 0.5) / (y_count(y_now) + 0.5 * alpha_x_);
  }

  void observe(int x, int y) {
    auto& bucket = buckets_[y];
    if (bucket.empty()) bucket.assign(static_cast<std::size_t>(alpha_x_), 0);
    ++bucket[static_cast<std::size_t>(x)];
    ++ycounts_[y];
    ++t_;
  }

  // Exact draw for the current SI letter: (2*joint + 1) / (2*y_count + alpha).
  int draw(int y_now, RandomStream& rng) const {
    std::uint64_t den = 2ULL * static_cast<std::uint64_t>(y_count(y_now)) + alpha_x_;
    std::uint64_t u = rng.next_below(den);
    std::uint64_t acc = 0;
    for (int a = 0; a < alpha_x_; ++a) {
      acc += 2ULL * static_cast<std::uint64_t>(joint_count(a, y_now)) + 1;
      if (u < acc) return a;
    }
    return alpha_x_ - 1;
  }

  int t() const { return t_; }

 private:
  int alpha_x_, alpha_y_;
  int t_ = 0;
  std::map<int, std::vector<int>> buckets_;  // lazily created per SI symbol
  std::map<int, int> ycounts_;
};

inline double kt_conditional_si(const CondMixtureState& state, int next_x, int y_now) {
  return state.conditional(next_x, y_now);
}

// Sequential log2 probability that the SI sampler emits x alongside y.
inline double kt_cond_log_prob(const Sequence& x, const Sequence& y) {
  if (x.n() != y.n()) throw std::invalid_argument("kt_cond_log_prob: length mismatch");
  if (x.n() < 1) throw std::invalid_argument("kt_cond_log_prob: empty sequence");
  CondMixtureState st(x.alpha, y.alpha);
  double lp = 0;
  for (int t = 0; t < x.n(); ++t) {
    lp += std::log2(st.conditional(x[t], y[t]));
    st.observe(x[t], y[t]);
  }
  return lp;
}

inline Sequence kt_cond_sample(int alpha_x, const Sequence& y, RandomStream& rng) {
  if (y.n() < 1) throw std::invalid_argument("kt_cond_sample: empty SI sequence");
  Sequence out(alpha_x);
  out.syms.reserve(static_cast<std::size_t>(y.n()));
  CondMixtureState st(alpha_x, y.alpha);
  for (int t = 0; t < y.n(); ++t) {
    int s = st.draw(y[t], rng);
    st.observe(s, y[t]);
    out.syms.push_back(static_cast<std::uint8_t>(s));
  }
  return out;
}

}  // namespace urg

#endif  // URG_KT_HPP
