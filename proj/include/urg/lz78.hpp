// SPDX-License-Identifier: MIT
//
// LZ78 incremental parsing: plain parses with per-phrase (prefix, letter)
// references and code lengths, and the joint parsing of (x, y) pair sequences
// with per-y-phrase bucket statistics used by guessing with side information.
//
// Conventions (fixed here, used consistently everywhere):
//  - phrase references are 1-based; prefix index 0 means the empty phrase;
//  - c counts complete phrases only; a final phrase that repeats an earlier
//    one (or is cut by the end of the sequence) is excluded from c but still
//    costs code length like a complete phrase would.
#ifndef URG_LZ78_HPP
#define URG_LZ78_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "urg/alphabet.hpp"
#include "urg/code_trees.hpp"
#include "urg/empirical.hpp"

namespace urg {

struct ParseResult {
  // Emitted phrases in order: (prefix reference, last symbol). The prefix
  // reference of an incomplete final phrase points to the phrase it repeats
  // (its own longest proper prefix), with its last consumed symbol.
  std::vector<std::pair<int, int>> phrases;
  std::vector<int> lengths;  // per emitted phrase
  int c = 0;                 // complete phrases
  bool last_complete = true;
  long long code_length = 0;  // sum over emitted phrases j of ceil(log2(j*alpha))

  int emitted() const { return static_cast<int>(phrases.size()); }
  // Phrase count including a final incomplete phrase, when present.
  int c_all() const { return c + (last_complete ? 0 : 1); }
};

namespace detail {
// Growable alpha-ary trie over phrase ids; node 0 is the root/empty phrase.
class PhraseTrie {
 public:
  explicit PhraseTrie(int alpha) : alpha_(alpha) { nodes_.assign(static_cast<std::size_t>(alpha), -1); }

  int root() const { return 0; }
  int child(int node, int sym) const {
    return nodes_[static_cast<std::size_t>(node) * alpha_ + sym];
  }
  // Adds a child and returns its node id.
  int add_child(int node, int sym) {
    int id = static_cast<int>(nodes_.size() / alpha_);
    nodes_.resize(nodes_.size() + static_cast<std::size_t>(alpha_), -1);
    nodes_[static_cast<std::size_t>(node) * alpha_ + sym] = id;
    return id;
  }

 private:
  int alpha_;
  std::vector<int> nodes_;  // child table, -1 = absent
};
}  // namespace detail

inline ParseResult lz78_parse(const Sequence& x) {
  if (x.n() < 1) throw std::invalid_argument("lz78_parse: empty sequence");
  ParseResult r;
  detail::PhraseTrie trie(x.alpha);
  int node = trie.root();  // current phrase = path from root
  int phrase_ref = 0;      // phrase id of current node (0 = empty)
  int phrase_len = 0;
  for (int i = 0; i < x.n(); ++i) {
    int sym = x[i];
    int nxt = trie.child(node, sym);
    ++phrase_len;
    if (nxt < 0) {  // new phrase complete
      trie.add_child(node, sym);
      r.phrases.push_back({phrase_ref, sym});
      r.lengths.push_back(phrase_len);
      ++r.c;
      node = trie.root();
      phrase_ref = 0;
      phrase_len = 0;
    } else {
      node = nxt;
      phrase_ref = node;  // node ids coincide with 1-based phrase ids
    }
  }
  if (phrase_len > 0) {  // trailing incomplete phrase (repeats an old one)
    // Its reference pair: the phrase minus its last symbol, plus that symbol.
    // Recover the prefix id by popping one symbol: walk again is O(len).
    r.last_complete = false;
    int prefix_ref = 0;
    {
      int nodep = trie.root();
      for (int i = x.n() - phrase_len; i < x.n() - 1; ++i) {
        nodep = trie.child(nodep, x[i]);
        if (nodep < 0) throw std::logic_error("lz78_parse: prefix chain broken");
      }
      prefix_ref = (phrase_len == 1) ? 0 : nodep;
    }
    r.phrases.push_back({prefix_ref, x[x.n() - 1]});
    r.lengths.push_back(phrase_len);
  }
  for (int j = 1; j <= r.emitted(); ++j)
    r.code_length += ceil_log2(static_cast<std::uint64_t>(j) * x.alpha);
  return r;
}

// Code length in bits: sum_{j=1..c'} ceil(log2(j*alpha)) over all emitted
// phrases, the final incomplete one included.
inline long long lz_code_length(const Sequence& x) { return lz78_parse(x).code_length; }

struct ConditionalParseResult {
  int c_xy = 0;                    // complete joint phrases
  int c_y = 0;                     // distinct y-phrase strings among them
  std::vector<int> c_l;            // x-phrase count per distinct y-phrase
  std::vector<int> y_phrase_len;   // lengths of those distinct y-phrases
  double u = 0;                    // sum_l c_l * log2(c_l), bits
  long long conditional_code_length = 0;
  bool last_complete = true;
  int partial_bucket = -1;  // index into c_l of the incomplete phrase's y-part
  int partial_len = 0;
};

// Incremental parse of the pair sequence ((x1,y1), (x2,y2), ...). Complete
// joint phrases are bucketed by their y-part string (first-appearance order).
// The conditional code length charges, per bucket, ceil(log2(j*alpha)) for
// the j-th member plus the y-part's length-code bits; a final incomplete
// phrase is charged as the next member of its own bucket.
inline ConditionalParseResult joint_parse(const Sequence& x, const Sequence& y) {
  if (x.n() != y.n()) throw std::invalid_argument("joint_parse: length mismatch");
  if (x.n() < 1) throw std::invalid_argument("joint_parse: empty sequences");
  ConditionalParseResult r;
  const int pair_alpha = static_cast<int>(x.alpha) * y.alpha;
  detail::PhraseTrie pair_trie(pair_alpha);
  // y-part bucketing via a y-only trie: bucket id stored at the y-node where
  // a complete phrase's y-part ends.
  detail::PhraseTrie y_trie(y.alpha);
  std::vector<int> bucket_of_ynode{-1};  // per y-trie node id

  auto y_bucket_at = [&](int ynode) -> int { return bucket_of_ynode[static_cast<std::size_t>(ynode)]; };

  int node = pair_trie.root();
  int ynode = y_trie.root();
  int phrase_len = 0;
  for (int i = 0; i < x.n(); ++i) {
    int pair_sym = static_cast<int>(x[i]) * y.alpha + y[i];
    ++phrase_len;
    // advance the y walk first (shared by complete/incomplete handling)
    int ynext = y_trie.child(ynode, y[i]);
    if (ynext < 0) {
      ynext = y_trie.add_child(ynode, y[i]);
      bucket_of_ynode.push_back(-1);
    }
    ynode = ynext;
    int nxt = pair_trie.child(node, pair_sym);
    if (nxt < 0) {  // complete joint phrase
      pair_trie.add_child(node, pair_sym);
      int bucket = y_bucket_at(ynode);
      if (bucket < 0) {
        bucket = static_cast<int>(r.c_l.size());
        bucket_of_ynode[static_cast<std::size_t>(ynode)] = bucket;
        r.c_l.push_back(0);
        r.y_phrase_len.push_back(phrase_len);
      }
      ++r.c_l[static_cast<std::size_t>(bucket)];
      ++r.c_xy;
      node = pair_trie.root();
      ynode = y_trie.root();
      phrase_len = 0;
    } else {
      node = nxt;
    }
  }
  if (phrase_len > 0) {
    r.last_complete = false;
    r.partial_len = phrase_len;
    int bucket = y_bucket_at(ynode);
    if (bucket < 0) {
      // y-part string never completed a phrase before: it opens a new bucket.
      bucket = static_cast<int>(r.c_l.size());
      bucket_of_ynode[static_cast<std::size_t>(ynode)] = bucket;
      r.c_l.push_back(0);
      r.y_phrase_len.push_back(phrase_len);
    }
    r.partial_bucket = bucket;
  }
  r.c_y = 0;  // distinct y-phrases among complete joint phrases
  for (int cl : r.c_l)
    if (cl > 0) ++r.c_y;

  for (std::size_t l = 0; l < r.c_l.size(); ++l) {
    int cl = r.c_l[l];
    r.u += cl * log2_int(cl);
    for (int j = 1; j <= cl; ++j)
      r.conditional_code_length +=
          ceil_log2(static_cast<std::uint64_t>(j) * x.alpha) +
          length_code_bits(static_cast<std::uint64_t>(r.y_phrase_len[l]));
  }
  if (!r.last_complete) {
    int j = r.c_l[static_cast<std::size_t>(r.partial_bucket)] + 1;
    r.conditional_code_length +=
        ceil_log2(static_cast<std::uint64_t>(j) * x.alpha) +
        length_code_bits(static_cast<std::uint64_t>(r.partial_len));
  }
  return r;
}

// Jensen step sanity: sum_l c_l log2(len(y-phrase l)) <= c_xy log2(n / c_xy),
// over complete phrases.
inline bool logsum_bound_check(const Sequence& x, const Sequence& y) {
  ConditionalParseResult r = joint_parse(x, y);
  if (r.c_xy == 0) return true;
  double lhs = 0;
  for (std::size_t l = 0; l < r.c_l.size(); ++l)
    lhs += r.c_l[l] * log2_int(r.y_phrase_len[l]);
  double rhs = r.c_xy * (std::log2(static_cast<double>(x.n())) - log2_int(r.c_xy));
  return lhs <= rhs + 1e-9;
}

}  // namespace urg

#endif  // URG_LZ78_HPP
