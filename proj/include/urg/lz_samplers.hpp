// SPDX-License-Identifier: MIT
//
// Exact samplers from LZ78-induced universal distributions:
//  - PhraseTree sampler ("lz-tree"): repeated root-to-leaf walks on a growing
//    alpha-ary tree with integer leaf-count weights; after i phrase births
//    every leaf is reached with probability exactly 1/(alpha + i(alpha-1)).
//  - Bit-fed sampler ("lz-bits"): fair random bits drive the LZ decoder; the
//    phrase-j codeword is a leaf of a complete binary tree with j*alpha
//    leaves, decoded as (prefix reference, letter) = (k div alpha, k mod alpha).
//  - Conditional bit-fed sampler ("lz-cond"): per phrase, a pruned Shannon
//    tree picks a decodable phrase length, then a complete binary tree with
//    (m+1)*alpha leaves picks (prefix, letter) within the bucket of previous
//    joint phrases sharing the y-part; prefix 0 is the empty phrase, in which
//    case the phrase degrades to length 1.
//
// Each *_log_prob is the exact log2 probability that the corresponding
// sampler emits the argument, summing over all decode histories.
#ifndef URG_LZ_SAMPLERS_HPP
#define URG_LZ_SAMPLERS_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "urg/alphabet.hpp"
#include "urg/code_trees.hpp"
#include "urg/rng.hpp"

namespace urg {

inline constexpr int kHistoryDfsMaxN = 32;  // decode-history enumeration guard

// Growing alpha-ary tree with integer weights = leaf counts. The root starts
// with alpha leaf children; reaching a leaf completes a phrase and births
// alpha fresh leaves beneath it.
class PhraseTree {
 public:
  explicit PhraseTree(int alpha) : alpha_(alpha) {
    nodes_.push_back(Node{0, static_cast<std::int64_t>(alpha)});  // root
    birth_block();                                                // its children
    nodes_[0].first_kid = 1;
  }

  int alpha() const { return alpha_; }
  int births() const { return births_; }
  std::int64_t total_leaves() const { return nodes_[0].weight; }
  bool is_leaf(int node) const { return nodes_[static_cast<std::size_t>(node)].first_kid < 0; }
  std::int64_t weight(int node) const { return nodes_[static_cast<std::size_t>(node)].weight; }
  int child(int node, int sym) const {
    return nodes_[static_cast<std::size_t>(node)].first_kid + sym;
  }
  int root() const { return 0; }

  // Turn a leaf into an internal node with alpha leaf children; ancestors'
  // weights grow by alpha - 1. `path` holds the nodes from root to the leaf.
  void birth(const std::vector<int>& path) {
    int leaf = path.back();
    nodes_[static_cast<std::size_t>(leaf)].first_kid = static_cast<int>(nodes_.size());
    birth_block();
    for (int node : path) nodes_[static_cast<std::size_t>(node)].weight += alpha_ - 1;
    nodes_[static_cast<std::size_t>(path.back())].weight = alpha_;  // was +=, leaf had 1
    ++births_;
  }

 private:
  struct Node {
    int first_kid = -1;  // children occupy [first_kid, first_kid + alpha)
    std::int64_t weight = 1;
  };
  void birth_block() {
    for (int a = 0; a < alpha_; ++a) nodes_.push_back(Node{-1, 1});
  }

  int alpha_;
  int births_ = 0;
  std::vector<Node> nodes_;
};

// Draw a length-n sequence with repeated weighted walks; the final walk is
// truncated once n symbols have been emitted.
inline Sequence lz_tree_sample(int alpha, int n, RandomStream& rng) {
  if (n < 1) throw std::invalid_argument("lz_tree_sample: n must be >= 1");
  Sequence out(alpha);
  out.syms.reserve(static_cast<std::size_t>(n));
  PhraseTree tree(alpha);
  std::vector<int> path;
  while (out.n() < n) {
    path.assign(1, tree.root());
    int node = tree.root();
    for (;;) {
      // integer-exact child choice proportional to leaf counts
      std::int64_t u = static_cast<std::int64_t>(
          rng.next_below(static_cast<std::uint64_t>(tree.weight(node))));
      int sym = 0;
      for (;; ++sym) {
        std::int64_t w = tree.weight(tree.child(node, sym));
        if (u < w) break;
        u -= w;
      }
      node = tree.child(node, sym);
      path.push_back(node);
      out.syms.push_back(static_cast<std::uint8_t>(sym));
      if (out.n() == n) return out;
      if (tree.is_leaf(node)) {  // phrase complete
        tree.birth(path);
        break;
      }
    }
  }
  return out;
}

// Exact log2 probability that lz_tree_sample emits x: follow x through the
// same tree evolution, multiplying branch weight ratios.
inline double lz_tree_log_prob(const Sequence& x) {
  if (x.n() < 1) throw std::invalid_argument("lz_tree_log_prob: empty sequence");
  PhraseTree tree(x.alpha);
  std::vector<int> path{tree.root()};
  int node = tree.root();
  double lp = 0;
  for (std::uint8_t sym : x.syms) {
    int child = tree.child(node, sym);
    lp += std::log2(static_cast<double>(tree.weight(child))) -
          std::log2(static_cast<double>(tree.weight(node)));
    node = child;
    path.push_back(node);
    if (tree.is_leaf(node)) {
      tree.birth(path);
      node = tree.root();
      path.assign(1, node);
    }
  }
  return lp;
}

// ---------------------------------------------------------------------------
// Bit-fed sampler.

inline Sequence lz_bits_sample(int alpha, int n, RandomStream& rng) {
  if (n < 1) throw std::invalid_argument("lz_bits_sample: n must be >= 1");
  Sequence out(alpha);
  out.syms.reserve(static_cast<std::size_t>(n));
  std::vector<std::vector<std::uint8_t>> dict;  // decoded phrases, in order
  while (out.n() < n) {
    std::uint64_t j = dict.size() + 1;
    CompleteBinaryCodeTree tree(j * static_cast<std::uint64_t>(alpha));
    std::uint64_t k = tree.walk(rng);
    std::uint64_t pi = k / static_cast<std::uint64_t>(alpha);
    int letter = static_cast<int>(k % static_cast<std::uint64_t>(alpha));
    std::vector<std::uint8_t> phrase;
    if (pi > 0) phrase = dict[static_cast<std::size_t>(pi - 1)];
    phrase.push_back(static_cast<std::uint8_t>(letter));
    std::size_t need = static_cast<std::size_t>(n - out.n());
    if (phrase.size() >= need) {  // final phrase, possibly truncated
      out.syms.insert(out.syms.end(), phrase.begin(), phrase.begin() + static_cast<long>(need));
      return out;
    }
    out.syms.insert(out.syms.end(), phrase.begin(), phrase.end());
    dict.push_back(std::move(phrase));  // duplicates allowed
  }
  return out;
}

namespace detail {
inline void lz_bits_dfs(const Sequence& x, int pos,
                        std::vector<std::vector<std::uint8_t>>& dict, double prob,
                        double& total) {
  const int alpha = x.alpha;
  std::uint64_t j = dict.size() + 1;
  CompleteBinaryCodeTree tree(j * static_cast<std::uint64_t>(alpha));
  const int need = x.n() - pos;
  for (std::uint64_t k = 0; k < tree.leaves(); ++k) {
    std::uint64_t pi = k / static_cast<std::uint64_t>(alpha);
    int letter = static_cast<int>(k % static_cast<std::uint64_t>(alpha));
    const std::vector<std::uint8_t>* prefix =
        pi > 0 ? &dict[static_cast<std::size_t>(pi - 1)] : nullptr;
    const int plen = 1 + (prefix ? static_cast<int>(prefix->size()) : 0);
    double p2 = prob * std::exp2(-tree.depth_of(k));
    if (plen >= need) {
      // must cover the remainder of x exactly (emission truncated at n)
      bool ok = true;
      for (int i = 0; i < need - 1 && ok; ++i)
        ok = (*prefix)[static_cast<std::size_t>(i)] == x[pos + i];
      if (ok && (need - 1 < plen - 1
                     ? (prefix && (*prefix)[static_cast<std::size_t>(need - 1)] == x[pos + need - 1])
                     : letter == x[pos + need - 1]))
        total += p2;
    } else {
      bool ok = true;
      for (int i = 0; i < plen - 1 && ok; ++i)
        ok = (*prefix)[static_cast<std::size_t>(i)] == x[pos + i];
      if (ok && letter == x[pos + plen - 1]) {
        std::vector<std::uint8_t> phrase;
        if (prefix) phrase = *prefix;
        phrase.push_back(static_cast<std::uint8_t>(letter));
        dict.push_back(std::move(phrase));
        lz_bits_dfs(x, pos + plen, dict, p2, total);
        dict.pop_back();
      }
    }
  }
}
}  // namespace detail

// Exact log2 probability that lz_bits_sample emits x, summed over all decode
// histories (dictionaries may contain duplicates, so histories branch).
inline double lz_bits_log_prob(const Sequence& x) {
  if (x.n() < 1) throw std::invalid_argument("lz_bits_log_prob: empty sequence");
  if (x.n() > kHistoryDfsMaxN)
    throw std::invalid_argument("lz_bits_log_prob: n exceeds the decode-history guard (32)");
  std::vector<std::vector<std::uint8_t>> dict;
  double total = 0;
  detail::lz_bits_dfs(x, 0, dict, 1.0, total);
  return std::log2(total);
}

// ---------------------------------------------------------------------------
// Conditional bit-fed sampler with side information y.

namespace detail {
struct CondPhrase {
  std::vector<std::uint8_t> x_part;
  int y_pos;  // y-part = y[y_pos .. y_pos + len)
  int len;
};

inline bool y_part_equals(const Sequence& y, const CondPhrase& ph, int pos, int len) {
  if (ph.len != len) return false;
  for (int i = 0; i < len; ++i)
    if (y[ph.y_pos + i] != y[pos + i]) return false;
  return true;
}

// Lengths l in 1..remaining that the decoder can represent at this point:
// l = 1 always; l >= 2 iff the (l-1)-prefix of the upcoming y-window equals
// the y-part of a previous joint phrase.
inline std::vector<int> valid_lengths(const Sequence& y, const std::vector<CondPhrase>& phrases,
                                      int pos) {
  std::vector<int> v{1};
  int remaining = y.n() - pos;
  for (int l = 2; l <= remaining; ++l) {
    for (const CondPhrase& ph : phrases) {
      if (y_part_equals(y, ph, pos, l - 1)) {
        v.push_back(l);
        break;
      }
    }
  }
  return v;
}

inline std::vector<int> bucket_members(const Sequence& y, const std::vector<CondPhrase>& phrases,
                                       int pos, int len_minus_1) {
  std::vector<int> idx;
  if (len_minus_1 == 0) return idx;
  for (int i = 0; i < static_cast<int>(phrases.size()); ++i)
    if (y_part_equals(y, phrases[static_cast<std::size_t>(i)], pos, len_minus_1))
      idx.push_back(i);
  return idx;
}
}  // namespace detail

inline Sequence lz_cond_sample(int alpha_x, const Sequence& y, RandomStream& rng) {
  if (y.n() < 1) throw std::invalid_argument("lz_cond_sample: empty SI sequence");
  Sequence out(alpha_x);
  out.syms.reserve(static_cast<std::size_t>(y.n()));
  std::vector<detail::CondPhrase> phrases;
  int pos = 0;
  while (pos < y.n()) {
    std::vector<int> valid = detail::valid_lengths(y, phrases, pos);
    IntegerCodeTree length_tree(valid);
    int L = length_tree.walk(rng);
    std::vector<int> bucket = detail::bucket_members(y, phrases, pos, L - 1);
    std::uint64_t m = bucket.size();
    CompleteBinaryCodeTree index_tree((m + 1) * static_cast<std::uint64_t>(alpha_x));
    std::uint64_t k = index_tree.walk(rng);
    std::uint64_t pi = k / static_cast<std::uint64_t>(alpha_x);
    int letter = static_cast<int>(k % static_cast<std::uint64_t>(alpha_x));
    detail::CondPhrase ph;
    if (pi == 0) {  // empty prefix: phrase degrades to length 1
      ph.x_part = {static_cast<std::uint8_t>(letter)};
    } else {
      ph.x_part = phrases[static_cast<std::size_t>(bucket[static_cast<std::size_t>(pi - 1)])].x_part;
      ph.x_part.push_back(static_cast<std::uint8_t>(letter));
    }
    ph.y_pos = pos;
    ph.len = static_cast<int>(ph.x_part.size());
    out.syms.insert(out.syms.end(), ph.x_part.begin(), ph.x_part.end());
    pos += ph.len;
    phrases.push_back(std::move(ph));
  }
  return out;
}

namespace detail {
inline void lz_cond_dfs(const Sequence& x, const Sequence& y, int pos,
                        std::vector<CondPhrase>& phrases, double prob, double& total) {
  if (pos == x.n()) {
    total += prob;
    return;
  }
  const int alpha = x.alpha;
  std::vector<int> valid = valid_lengths(y, phrases, pos);
  IntegerCodeTree length_tree(valid);
  for (int L : valid) {
    double lp = prob * std::exp2(-length_tree.depth_of(L));
    std::vector<int> bucket = bucket_members(y, phrases, pos, L - 1);
    std::uint64_t m = bucket.size();
    CompleteBinaryCodeTree index_tree((m + 1) * static_cast<std::uint64_t>(alpha));
    for (std::uint64_t k = 0; k < index_tree.leaves(); ++k) {
      std::uint64_t pi = k / static_cast<std::uint64_t>(alpha);
      int letter = static_cast<int>(k % static_cast<std::uint64_t>(alpha));
      const std::vector<std::uint8_t>* prefix =
          pi > 0 ? &phrases[static_cast<std::size_t>(bucket[static_cast<std::size_t>(pi - 1)])].x_part
                 : nullptr;
      int plen = 1 + (prefix ? static_cast<int>(prefix->size()) : 0);
      bool ok = true;
      for (int i = 0; i < plen - 1 && ok; ++i)
        ok = (*prefix)[static_cast<std::size_t>(i)] == x[pos + i];
      if (!ok || letter != x[pos + plen - 1]) continue;
      CondPhrase ph;
      ph.x_part.assign(x.syms.begin() + pos, x.syms.begin() + pos + plen);
      ph.y_pos = pos;
      ph.len = plen;
      phrases.push_back(std::move(ph));
      lz_cond_dfs(x, y, pos + plen, phrases, lp * std::exp2(-index_tree.depth_of(k)), total);
      phrases.pop_back();
    }
  }
}
}  // namespace detail

// Exact log2 probability that lz_cond_sample(y) emits x.
inline double lz_cond_log_prob(const Sequence& x, const Sequence& y) {
  if (x.n() != y.n()) throw std::invalid_argument("lz_cond_log_prob: length mismatch");
  if (x.n() < 1) throw std::invalid_argument("lz_cond_log_prob: empty sequence");
  if (x.n() > kHistoryDfsMaxN)
    throw std::invalid_argument("lz_cond_log_prob: n exceeds the decode-history guard (32)");
  std::vector<detail::CondPhrase> phrases;
  double total = 0;
  detail::lz_cond_dfs(x, y, 0, phrases, 1.0, total);
  return std::log2(total);
}

}  // namespace urg

#endif  // URG_LZ_SAMPLERS_HPP
