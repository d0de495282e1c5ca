// SPDX-License-Identifier: MIT
//
// The binary code trees that turn fair random bits into exact discrete draws:
//  - CompleteBinaryCodeTree: m leaves at depths {L-1, L}, Kraft-tight; one
//    root-to-leaf walk consumes at most L bits and lands on leaf k with
//    probability exactly 2^{-depth(k)}.
//  - IntegerCodeTree: a canonical Shannon code for the weights 6/(pi^2 i^2)
//    restricted to the currently valid integers, pruned and shortened so the
//    tree is complete (every bit pattern decodes).
#ifndef URG_CODE_TREES_HPP
#define URG_CODE_TREES_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "urg/rng.hpp"

namespace urg {

// ceil(log2(v)) for v >= 1, exactly in integers.
inline int ceil_log2(std::uint64_t v) {
  if (v == 0) throw std::invalid_argument("ceil_log2: argument must be >= 1");
  return v == 1 ? 0 : 64 - std::countl_zero(v - 1);
}

// Codeword length for integer i under the weights Q(i) = 6 / (pi^2 i^2):
// L(i) = ceil(-log2 Q(i)) = ceil(2 log2 i + log2(pi^2/6)). The fractional part
// stays > 1e-6 away from integers for i <= 1e6, so the double ceil is exact.
inline int length_code_bits(std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("length_code_bits: argument must be >= 1");
  static const double kOffset = std::log2(std::acos(-1.0) * std::acos(-1.0) / 6.0);
  return static_cast<int>(std::ceil(2.0 * std::log2(static_cast<double>(i)) + kOffset));
}

// Complete binary tree with exactly m leaves, depths in {L-1, L} where
// 2^{L-1} < m <= 2^L. The m - 2^{L-1} leftmost depth-(L-1) positions are the
// ones split to depth L, so leaves 0 .. 2*deep-1 sit at depth L and the rest
// at depth L-1. Leaf indices run left to right.
class CompleteBinaryCodeTree {
 public:
  explicit CompleteBinaryCodeTree(std::uint64_t m) : m_(m) {
    if (m == 0) throw std::invalid_argument("code tree needs at least one leaf");
    L_ = ceil_log2(m);
    deep_ = (m == 1) ? 0 : m - (1ULL << (L_ - 1));
  }

  std::uint64_t leaves() const { return m_; }
  int max_depth() const { return L_; }

  int depth_of(std::uint64_t k) const {
    if (k >= m_) throw std::invalid_argument("depth_of: leaf index out of range");
    if (m_ == 1) return 0;
    return k < 2 * deep_ ? L_ : L_ - 1;
  }

  // Walk fair bits to a leaf. Reads L-1 bits (MSB first) to pick a depth-(L-1)
  // position v; positions v < deep split once more.
  std::uint64_t walk(RandomStream& rng) const {
    if (m_ == 1) return 0;
    std::uint64_t v = 0;
    for (int i = 0; i < L_ - 1; ++i) v = (v << 1) | static_cast<std::uint64_t>(rng.next_bit());
    if (v < deep_) return 2 * v + static_cast<std::uint64_t>(rng.next_bit());
    return v + deep_;
  }

 private:
  std::uint64_t m_;
  int L_;
  std::uint64_t deep_;
};

// Pruned + shortened canonical Shannon-code tree over a set of valid integers
// (ascending). Length targets come from length_code_bits, which is
// non-decreasing, so canonical allocation never overflows Kraft. Contracting
// single-child chains afterwards makes the tree complete; a single valid
// value degenerates to a zero-bit tree.
class IntegerCodeTree {
 public:
  explicit IntegerCodeTree(const std::vector<int>& values_ascending) {
    if (values_ascending.empty())
      throw std::invalid_argument("integer code tree needs at least one value");
    for (std::size_t i = 1; i < values_ascending.size(); ++i)
      if (values_ascending[i - 1] >= values_ascending[i])
        throw std::invalid_argument("integer code tree values must be strictly ascending");
    if (values_ascending.size() == 1) {
      nodes_.push_back(Node{-1, -1, values_ascending[0]});
      root_ = 0;
      depths_.push_back({values_ascending[0], 0});
      return;
    }
    // Canonical codes in ascending value order (lengths non-decreasing).
    std::uint64_t code = 0;
    int prev_len = -1;
    struct Coded {
      int value;
      std::uint64_t code;
      int len;
    };
    std::vector<Coded> coded;
    coded.reserve(values_ascending.size());
    for (int v : values_ascending) {
      int len = length_code_bits(static_cast<std::uint64_t>(v));
      if (prev_len < 0)
        code = 0;
      else
        code = (code + 1) << (len - prev_len);
      if (code >> len) throw std::logic_error("integer code tree: Kraft overflow");
      coded.push_back({v, code, len});
      prev_len = len;
    }
    // Build the trie of codewords.
    root_ = new_node();
    for (const Coded& c : coded) {
      int node = root_;
      for (int b = c.len - 1; b >= 0; --b) {
        int bit = static_cast<int>((c.code >> b) & 1u);
        // allocate first: push_back may reallocate nodes_
        int slot = bit ? nodes_[static_cast<std::size_t>(node)].one
                       : nodes_[static_cast<std::size_t>(node)].zero;
        if (b == 0) {
          slot = new_leaf(c.value);
        } else if (slot < 0) {
          slot = new_node();
        }
        Node& parent = nodes_[static_cast<std::size_t>(node)];
        (bit ? parent.one : parent.zero) = slot;
        node = slot;
      }
    }
    // Shorten: bypass single-child internal nodes.
    root_ = contract(root_);
    collect_depths(root_, 0);
  }

  // Depth (= number of random bits consumed) of a value's leaf.
  int depth_of(int value) const {
    for (const auto& d : depths_)
      if (d.first == value) return d.second;
    throw std::invalid_argument("depth_of: value not in tree");
  }

  const std::vector<std::pair<int, int>>& leaf_depths() const { return depths_; }

  // Walk fair bits to a value.
  int walk(RandomStream& rng) const {
    int node = root_;
    while (!is_leaf(node)) {
      node = rng.next_bit() ? nodes_[static_cast<std::size_t>(node)].one
                            : nodes_[static_cast<std::size_t>(node)].zero;
    }
    return nodes_[static_cast<std::size_t>(node)].value;
  }

 private:
  struct Node {
    int zero = -1, one = -1;
    int value = -1;  // valid for leaves
  };

  int new_node() {
    nodes_.push_back(Node{});
    return static_cast<int>(nodes_.size()) - 1;
  }
  int new_leaf(int value) {
    nodes_.push_back(Node{-1, -1, value});
    return static_cast<int>(nodes_.size()) - 1;
  }
  bool is_leaf(int i) const {
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    return n.zero < 0 && n.one < 0;
  }

  int contract(int i) {
    Node& n = nodes_[static_cast<std::size_t>(i)];
    if (n.zero < 0 && n.one < 0) return i;
    if (n.zero >= 0) n.zero = contract(n.zero);
    if (n.one >= 0) n.one = contract(n.one);
    if (n.zero < 0) return n.one;
    if (n.one < 0) return n.zero;
    return i;
  }

  void collect_depths(int i, int d) {
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    if (n.zero < 0 && n.one < 0) {
      depths_.push_back({n.value, d});
      return;
    }
    collect_depths(n.zero, d + 1);
    collect_depths(n.one, d + 1);
  }

  std::vector<Node> nodes_;
  std::vector<std::pair<int, int>> depths_;
  int root_ = -1;
};

}  // namespace urg

#endif  // URG_CODE_TREES_HPP
