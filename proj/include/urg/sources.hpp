// SPDX-License-Identifier: MIT
//
// Probabilistic sources for the guessing experiments: memoryless sources,
// hidden Markov sources given by a kernel K[z][x][z'] = P(x, z' | z), and
// joint hidden Markov sources emitting (x, y) pairs for side-information
// experiments. All probabilities are carried in the log2 domain; the forward
// recursion uses per-step scaling so sequences of length ~1e5 stay finite.
#ifndef URG_SOURCES_HPP
#define URG_SOURCES_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "urg/alphabet.hpp"
#include "urg/rng.hpp"

namespace urg {

inline constexpr int kMaxStates = 16;
inline constexpr double kDistTolerance = 1e-12;

struct MemorylessSource {
  Alphabet alphabet;
  std::vector<double> probs;

  MemorylessSource(Alphabet a, std::vector<double> p)
      : alphabet(std::move(a)), probs(std::move(p)) {
    if (static_cast<int>(probs.size()) != alphabet.size())
      throw std::invalid_argument("memoryless source: probability vector size mismatch");
    double sum = 0;
    for (double v : probs) {
      if (v < 0) throw std::invalid_argument("memoryless source: negative probability");
      sum += v;
    }
    if (std::fabs(sum - 1.0) > kDistTolerance)
      throw std::invalid_argument("memoryless source: probabilities must sum to 1");
  }

  double log2_prob(const Sequence& x) const {
    if (x.alpha != alphabet.size())
      throw std::invalid_argument("memoryless source: alphabet mismatch");
    double lp = 0;
    for (std::uint8_t s : x.syms) lp += std::log2(probs[s]);
    return lp;
  }
};

class HiddenMarkovSource {
 public:
  // kernel laid out as K[z][x][z'], row-major over (z, x, z').
  HiddenMarkovSource(Alphabet alphabet, int states, int initial_state,
                     std::vector<double> kernel)
      : alphabet_(std::move(alphabet)),
        states_(states),
        initial_(initial_state),
        kernel_(std::move(kernel)) {
    validate();
  }

  static HiddenMarkovSource memoryless(const MemorylessSource& m) {
    std::vector<double> k(m.probs);  // s = 1: K[0][x][0] = P(x)
    return HiddenMarkovSource(m.alphabet, 1, 0, std::move(k));
  }

  static HiddenMarkovSource bernoulli(double theta) {
    return memoryless(MemorylessSource(Alphabet::binary(), {1.0 - theta, theta}));
  }

  const Alphabet& alphabet() const { return alphabet_; }
  int alpha() const { return alphabet_.size(); }
  int states() const { return states_; }
  int initial_state() const { return initial_; }
  bool is_memoryless() const { return states_ == 1; }

  double k(int z, int x, int zp) const {
    return kernel_[(static_cast<std::size_t>(z) * alpha() + x) * states_ + zp];
  }

  // Marginal symbol probabilities if memoryless (s = 1).
  std::vector<double> memoryless_probs() const {
    if (!is_memoryless())
      throw std::logic_error("memoryless_probs: source has more than one state");
    return kernel_;
  }

 private:
  void validate() const {
    if (states_ < 1 || states_ > kMaxStates)
      throw std::invalid_argument("hidden Markov source: state count must be in [1,16]");
    if (initial_ < 0 || initial_ >= states_)
      throw std::invalid_argument("hidden Markov source: initial state out of range");
    if (kernel_.size() != static_cast<std::size_t>(states_) * alpha() * states_)
      throw std::invalid_argument("hidden Markov source: kernel shape mismatch");
    for (double v : kernel_)
      if (!(v >= 0))
        throw std::invalid_argument("hidden Markov source: kernel entries must be >= 0");
    for (int z = 0; z < states_; ++z) {
      double sum = 0;
      for (int x = 0; x < alpha(); ++x)
        for (int zp = 0; zp < states_; ++zp) sum += k(z, x, zp);
      if (std::fabs(sum - 1.0) > kDistTolerance)
        throw std::invalid_argument("hidden Markov source: kernel slice for state " +
                                    std::to_string(z) + " sums to " + std::to_string(sum) +
                                    ", expected 1");
    }
  }

  Alphabet alphabet_;
  int states_;
  int initial_;
  std::vector<double> kernel_;
};

class JointHiddenMarkovSource {
 public:
  // kernel laid out as K[z][x][y][z'].
  JointHiddenMarkovSource(Alphabet x_alphabet, Alphabet y_alphabet, int states,
                          int initial_state, std::vector<double> kernel)
      : x_alphabet_(std::move(x_alphabet)),
        y_alphabet_(std::move(y_alphabet)),
        states_(states),
        initial_(initial_state),
        kernel_(std::move(kernel)) {
    validate();
  }

  const Alphabet& x_alphabet() const { return x_alphabet_; }
  const Alphabet& y_alphabet() const { return y_alphabet_; }
  int alpha_x() const { return x_alphabet_.size(); }
  int alpha_y() const { return y_alphabet_.size(); }
  int states() const { return states_; }
  int initial_state() const { return initial_; }

  double k(int z, int x, int y, int zp) const {
    return kernel_[((static_cast<std::size_t>(z) * alpha_x() + x) * alpha_y() + y) * states_ +
                   zp];
  }

 private:
  void validate() const {
    if (states_ < 1 || states_ > kMaxStates)
      throw std::invalid_argument("joint source: state count must be in [1,16]");
    if (initial_ < 0 || initial_ >= states_)
      throw std::invalid_argument("joint source: initial state out of range");
    if (kernel_.size() !=
        static_cast<std::size_t>(states_) * alpha_x() * alpha_y() * states_)
      throw std::invalid_argument("joint source: kernel shape mismatch");
    for (double v : kernel_)
      if (!(v >= 0)) throw std::invalid_argument("joint source: kernel entries must be >= 0");
    for (int z = 0; z < states_; ++z) {
      double sum = 0;
      for (int x = 0; x < alpha_x(); ++x)
        for (int y = 0; y < alpha_y(); ++y)
          for (int zp = 0; zp < states_; ++zp) sum += k(z, x, y, zp);
      if (std::fabs(sum - 1.0) > kDistTolerance)
        throw std::invalid_argument("joint source: kernel slice for state " + std::to_string(z) +
                                    " sums to " + std::to_string(sum) + ", expected 1");
    }
  }

  Alphabet x_alphabet_;
  Alphabet y_alphabet_;
  int states_;
  int initial_;
  std::vector<double> kernel_;
};

// Draw a length-n realization by sequentially sampling (x_t, z_{t+1}) ~ K[z_t].
// Cell selection walks the kernel slice in (x, z') order against one uniform
// draw; the final cell absorbs rounding residue, so the walk always lands.
inline Sequence generate(const HiddenMarkovSource& src, int n, RandomStream& rng) {
  if (n < 0) throw std::invalid_argument("generate: n must be >= 0");
  Sequence out(src.alpha());
  out.syms.reserve(static_cast<std::size_t>(n));
  int z = src.initial_state();
  for (int t = 0; t < n; ++t) {
    double u = rng.next_unit();
    double acc = 0;
    int chosen_x = src.alpha() - 1, chosen_zp = src.states() - 1;
    bool picked = false;
    for (int x = 0; x < src.alpha() && !picked; ++x) {
      for (int zp = 0; zp < src.states() && !picked; ++zp) {
        acc += src.k(z, x, zp);
        if (u < acc) {
          chosen_x = x;
          chosen_zp = zp;
          picked = true;
        }
      }
    }
    out.syms.push_back(static_cast<std::uint8_t>(chosen_x));
    z = chosen_zp;
  }
  return out;
}

// log2 P(x): scaled forward recursion, exact marginalization over states.
inline double exact_log_prob(const HiddenMarkovSource& src, const Sequence& x) {
  if (x.alpha != src.alpha())
    throw std::invalid_argument("exact_log_prob: alphabet mismatch");
  const int s = src.states();
  std::vector<double> w(static_cast<std::size_t>(s), 0.0), nw(static_cast<std::size_t>(s));
  w[static_cast<std::size_t>(src.initial_state())] = 1.0;
  double log2p = 0;
  for (std::uint8_t sym : x.syms) {
    std::fill(nw.begin(), nw.end(), 0.0);
    for (int z = 0; z < s; ++z) {
      if (w[static_cast<std::size_t>(z)] == 0) continue;
      for (int zp = 0; zp < s; ++zp)
        nw[static_cast<std::size_t>(zp)] += w[static_cast<std::size_t>(z)] * src.k(z, sym, zp);
    }
    double scale = 0;
    for (double v : nw) scale += v;
    if (scale <= 0) return -std::numeric_limits<double>::infinity();
    log2p += std::log2(scale);
    for (int z = 0; z < s; ++z) w[static_cast<std::size_t>(z)] = nw[static_cast<std::size_t>(z)] / scale;
  }
  return log2p;
}

inline std::pair<Sequence, Sequence> generate_joint(const JointHiddenMarkovSource& src, int n,
                                                    RandomStream& rng) {
  if (n < 0) throw std::invalid_argument("generate_joint: n must be >= 0");
  Sequence x(src.alpha_x()), y(src.alpha_y());
  int z = src.initial_state();
  for (int t = 0; t < n; ++t) {
    double u = rng.next_unit();
    double acc = 0;
    int cx = src.alpha_x() - 1, cy = src.alpha_y() - 1, cz = src.states() - 1;
    bool picked = false;
    for (int xs = 0; xs < src.alpha_x() && !picked; ++xs)
      for (int ys = 0; ys < src.alpha_y() && !picked; ++ys)
        for (int zp = 0; zp < src.states() && !picked; ++zp) {
          acc += src.k(z, xs, ys, zp);
          if (u < acc) {
            cx = xs;
            cy = ys;
            cz = zp;
            picked = true;
          }
        }
    x.syms.push_back(static_cast<std::uint8_t>(cx));
    y.syms.push_back(static_cast<std::uint8_t>(cy));
    z = cz;
  }
  return {std::move(x), std::move(y)};
}

// log2 P(x, y): scaled forward recursion over the pair process.
inline double exact_joint_log_prob(const JointHiddenMarkovSource& src, const Sequence& x,
                                   const Sequence& y) {
  if (x.n() != y.n()) throw std::invalid_argument("exact_joint_log_prob: length mismatch");
  if (x.alpha != src.alpha_x() || y.alpha != src.alpha_y())
    throw std::invalid_argument("exact_joint_log_prob: alphabet mismatch");
  const int s = src.states();
  std::vector<double> w(static_cast<std::size_t>(s), 0.0), nw(static_cast<std::size_t>(s));
  w[static_cast<std::size_t>(src.initial_state())] = 1.0;
  double log2p = 0;
  for (int t = 0; t < x.n(); ++t) {
    std::fill(nw.begin(), nw.end(), 0.0);
    for (int z = 0; z < s; ++z) {
      if (w[static_cast<std::size_t>(z)] == 0) continue;
      for (int zp = 0; zp < s; ++zp)
        nw[static_cast<std::size_t>(zp)] +=
            w[static_cast<std::size_t>(z)] * src.k(z, x[t], y[t], zp);
    }
    double scale = 0;
    for (double v : nw) scale += v;
    if (scale <= 0) return -std::numeric_limits<double>::infinity();
    log2p += std::log2(scale);
    for (int z = 0; z < s; ++z) w[static_cast<std::size_t>(z)] = nw[static_cast<std::size_t>(z)] / scale;
  }
  return log2p;
}

}  // namespace urg

#endif  // URG_SOURCES_HPP
