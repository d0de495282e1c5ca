// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "urg/alphabet.hpp"

using urg::Alphabet;
using urg::Sequence;

TEST_CASE("alphabet round-trips symbols and indices") {
  Alphabet ab("abc");
  CHECK(ab.size() == 3);
  CHECK(ab.symbol(0) == 'a');
  CHECK(ab.index('c') == 2);
  CHECK(ab.contains('b'));
  CHECK_FALSE(ab.contains('z'));
  CHECK_THROWS_AS(ab.index('z'), std::invalid_argument);
  CHECK(Alphabet::binary().symbols() == "01");
}

TEST_CASE("alphabet rejects duplicates and bad sizes") {
  CHECK_THROWS_AS(Alphabet("aa"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("x"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("0123456789abcdefg"), std::invalid_argument);
}

TEST_CASE("sequences validate symbol indices") {
  Sequence s(2);
  s.push(0);
  s.push(1);
  CHECK(s.n() == 2);
  CHECK(s[1] == 1);
  CHECK_THROWS_AS(s.push(2), std::invalid_argument);
  CHECK_THROWS_AS(Sequence(2, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Sequence(1), std::invalid_argument);
}

TEST_CASE("make_sequence and render are inverse") {
  Alphabet ab("01");
  Sequence s = urg::make_sequence(ab, "0110");
  CHECK(s.syms == std::vector<std::uint8_t>{0, 1, 1, 0});
  CHECK(urg::render(ab, s) == "0110");
  CHECK(urg::seq("101") == urg::make_sequence(ab, "101"));
  CHECK_THROWS_AS(urg::make_sequence(ab, "012"), std::invalid_argument);
}

TEST_CASE("next_sequence enumerates the whole space lexicographically") {
  Sequence s(3);
  s.syms.assign(4, 0);
  std::uint64_t count = 0;
  Sequence prev = s;
  do {
    ++count;
    prev = s;
  } while (urg::next_sequence(s));
  CHECK(count == urg::sequence_space_size(3, 4));
  CHECK(prev.syms == std::vector<std::uint8_t>{2, 2, 2, 2});
}

TEST_CASE("sequence_space_size guards against overflow") {
  CHECK(urg::sequence_space_size(2, 10) == 1024);
  CHECK(urg::sequence_space_size(3, 14) == 4782969);
  CHECK_THROWS_AS(urg::sequence_space_size(2, 80), std::invalid_argument);
}
