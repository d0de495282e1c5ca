// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "urg/empirical.hpp"
#include "urg/lz78.hpp"
#include "urg/rng.hpp"

using urg::ConditionalParseResult;
using urg::ParseResult;
using urg::Sequence;
using urg::seq;

TEST_CASE("worked incremental parse of 1011010100010") {
  ParseResult r = urg::lz78_parse(seq("1011010100010"));
  CHECK(r.c == 7);
  CHECK(r.c_all() == 7);
  CHECK(r.last_complete);
  CHECK(r.code_length == 21);
  REQUIRE(r.emitted() == 7);
  // phrases: 1, 0, 11, 01, 010, 00, 10
  std::vector<std::pair<int, int>> expect = {{0, 1}, {0, 0}, {1, 1}, {2, 1},
                                             {4, 0}, {2, 0}, {1, 0}};
  CHECK(r.phrases == expect);
  CHECK(r.lengths == std::vector<int>{1, 1, 2, 2, 3, 2, 2});
}

TEST_CASE("incomplete final phrase is counted separately") {
  ParseResult r = urg::lz78_parse(seq("1111"));
  CHECK(r.c == 2);
  CHECK_FALSE(r.last_complete);
  CHECK(r.c_all() == 3);
  CHECK(r.emitted() == 3);
  // 1, 11, then a dangling 1; charges ceil(log2 2j) for j = 1..3
  CHECK(r.code_length == 1 + 2 + 3);
  CHECK(r.lengths == std::vector<int>{1, 2, 1});
  CHECK(urg::lz_code_length(seq("1111")) == 6);
}

TEST_CASE("phrase lengths always cover the input") {
  urg::RandomStream rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(40));
    Sequence x(2);
    for (int i = 0; i < n; ++i) x.push(static_cast<int>(rng.next_below(2)));
    ParseResult r = urg::lz78_parse(x);
    int total = 0;
    for (int l : r.lengths) total += l;
    CHECK(total == n);
    CHECK(r.c + (r.last_complete ? 0 : 1) == r.emitted());
  }
}

TEST_CASE("joint parse equals the pair-alphabet parse") {
  urg::RandomStream rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(30));
    Sequence x(2), y(2), pair(4);
    for (int i = 0; i < n; ++i) {
      int xs = static_cast<int>(rng.next_below(2));
      int ys = static_cast<int>(rng.next_below(2));
      x.push(xs);
      y.push(ys);
      pair.push(xs * 2 + ys);
    }
    ConditionalParseResult joint = urg::joint_parse(x, y);
    ParseResult flat = urg::lz78_parse(pair);
    CHECK(joint.c_xy == flat.c);
    CHECK(joint.last_complete == flat.last_complete);
    int bucket_total = 0;
    for (int cl : joint.c_l) bucket_total += cl;
    CHECK(bucket_total == joint.c_xy);
    int nonempty = 0;
    for (int cl : joint.c_l)
      if (cl > 0) ++nonempty;
    CHECK(joint.c_y == nonempty);
  }
}

TEST_CASE("joint parse recomputes u from its buckets") {
  Sequence x = seq("011010011101");
  Sequence y = seq("001100110011");
  ConditionalParseResult r = urg::joint_parse(x, y);
  double u = 0;
  for (int cl : r.c_l) u += cl * urg::log2_int(cl);
  CHECK(r.u == u);
  CHECK(r.c_y <= r.c_xy);
  if (!r.last_complete) {
    REQUIRE(r.partial_bucket >= 0);
    CHECK(r.partial_bucket < static_cast<int>(r.c_l.size()));
    CHECK(r.partial_len >= 1);
  }
}

TEST_CASE("constant side information keeps the x-parse structure visible") {
  // Under constant y every complete joint phrase is bucketed by its length
  // alone, so bucket lengths are distinct and counts sum to c_xy.
  Sequence x = seq("1011010100010");
  Sequence y = seq("0000000000000");
  ConditionalParseResult r = urg::joint_parse(x, y);
  int total = 0;
  for (std::size_t l = 0; l < r.c_l.size(); ++l) {
    total += r.c_l[l];
    for (std::size_t m = l + 1; m < r.c_l.size(); ++m)
      CHECK(r.y_phrase_len[l] != r.y_phrase_len[m]);
  }
  CHECK(total == r.c_xy);
}

TEST_CASE("conditional code length bounds and Jensen check") {
  urg::RandomStream rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(24));
    Sequence x(2), y(2);
    for (int i = 0; i < n; ++i) {
      x.push(static_cast<int>(rng.next_below(2)));
      y.push(static_cast<int>(rng.next_below(2)));
    }
    ConditionalParseResult r = urg::joint_parse(x, y);
    CHECK(r.conditional_code_length >= r.c_xy);  // >= 1 bit per complete phrase
    CHECK(urg::logsum_bound_check(x, y));
  }
}
