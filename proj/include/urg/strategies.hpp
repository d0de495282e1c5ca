// SPDX-License-Identifier: MIT
//
// Uniform dispatch over the randomized guessing strategies: each strategy is
// a sampler over X^n paired with the exact log2 probability of any outcome.
#ifndef URG_STRATEGIES_HPP
#define URG_STRATEGIES_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "urg/alphabet.hpp"
#include "urg/kt.hpp"
#include "urg/lz_samplers.hpp"
#include "urg/rng.hpp"

namespace urg {

enum class Strategy { kt, lz_tree, lz_bits, lz_cond };

inline const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kt: return "kt";
    case Strategy::lz_tree: return "lz-tree";
    case Strategy::lz_bits: return "lz-bits";
    case Strategy::lz_cond: return "lz-cond";
  }
  return "?";
}

inline Strategy parse_strategy(const std::string& name) {
  if (name == "kt") return Strategy::kt;
  if (name == "lz-tree") return Strategy::lz_tree;
  if (name == "lz-bits") return Strategy::lz_bits;
  if (name == "lz-cond") return Strategy::lz_cond;
  throw std::invalid_argument("unknown strategy '" + name +
                              "' (expected kt, lz-tree, lz-bits or lz-cond)");
}

// One guess: a fresh length-n draw from the strategy's distribution.
inline Sequence strategy_sample(Strategy s, int alpha, int n, RandomStream& rng,
                                const Sequence* si = nullptr) {
  switch (s) {
    case Strategy::kt: return kt_sample(alpha, n, rng);
    case Strategy::lz_tree: return lz_tree_sample(alpha, n, rng);
    case Strategy::lz_bits: return lz_bits_sample(alpha, n, rng);
    case Strategy::lz_cond:
      if (!si) throw std::invalid_argument("lz-cond strategy requires side information");
      if (si->n() != n) throw std::invalid_argument("side information length must equal n");
      return lz_cond_sample(alpha, *si, rng);
  }
  throw std::logic_error("strategy_sample: unreachable");
}

// Exact log2 probability that one strategy_sample call emits x.
inline double strategy_log2_prob(Strategy s, const Sequence& x, const Sequence* si = nullptr) {
  switch (s) {
    case Strategy::kt: return kt_sequence_log_prob(x);
    case Strategy::lz_tree: return lz_tree_log_prob(x);
    case Strategy::lz_bits: return lz_bits_log_prob(x);
    case Strategy::lz_cond:
      if (!si) throw std::invalid_argument("lz-cond strategy requires side information");
      return lz_cond_log_prob(x, *si);
  }
  throw std::logic_error("strategy_log2_prob: unreachable");
}

// Bind strategy + shape into a reusable guess generator (used by the attack
// simulator, one generator per agent stream).
inline std::function<Sequence(RandomStream&)> make_guesser(Strategy s, int alpha, int n,
                                                           std::optional<Sequence> si = {}) {
  return [s, alpha, n, si = std::move(si)](RandomStream& rng) {
    return strategy_sample(s, alpha, n, rng, si ? &*si : nullptr);
  };
}

}  // namespace urg

#endif  // URG_STRATEGIES_HPP
