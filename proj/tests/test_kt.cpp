// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "urg/kt.hpp"
#include "urg/rng.hpp"
#include "urg/stats.hpp"

using urg::RandomStream;
using urg::Sequence;
using urg::seq;

TEST_CASE("add-half mixture law at n=2 is {3/8, 1/8, 1/8, 3/8}") {
  CHECK(std::exp2(urg::kt_sequence_log_prob(seq("00"))) == Catch::Approx(3.0 / 8).epsilon(1e-14));
  CHECK(std::exp2(urg::kt_sequence_log_prob(seq("01"))) == Catch::Approx(1.0 / 8).epsilon(1e-14));
  CHECK(std::exp2(urg::kt_sequence_log_prob(seq("10"))) == Catch::Approx(1.0 / 8).epsilon(1e-14));
  CHECK(std::exp2(urg::kt_sequence_log_prob(seq("11"))) == Catch::Approx(3.0 / 8).epsilon(1e-14));
}

TEST_CASE("sequential conditionals track counts") {
  urg::MixtureState st(2);
  CHECK(st.conditional(0) == 0.5);
  st.observe(0);
  CHECK(st.conditional(0) == Catch::Approx(1.5 / 2));  // (1 + 1/2) / (1 + 1)
  CHECK(st.conditional(1) == Catch::Approx(0.5 / 2));
  st.observe(1);
  CHECK(st.t() == 2);
  CHECK(st.count(0) == 1);
}

TEST_CASE("closed form equals the sequential product") {
  for (int n = 1; n <= 12; ++n) {
    Sequence x(2);
    x.syms.assign(static_cast<std::size_t>(n), 0);
    do {
      CHECK(std::fabs(urg::kt_sequence_log_prob(x) - urg::kt_closed_form_log_prob(x)) < 1e-10);
    } while (urg::next_sequence(x));
  }
  Sequence t(3);
  t.syms = {0, 1, 1, 2, 0, 2, 2};
  CHECK(std::fabs(urg::kt_sequence_log_prob(t) - urg::kt_closed_form_log_prob(t)) < 1e-10);
}

TEST_CASE("mixture law sums to one") {
  for (int alpha : {2, 3}) {
    for (int n : {1, 4, 6}) {
      double sum = 0;
      Sequence x(alpha);
      x.syms.assign(static_cast<std::size_t>(n), 0);
      do {
        sum += std::exp2(urg::kt_sequence_log_prob(x));
      } while (urg::next_sequence(x));
      CHECK(sum == Catch::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("sampler realizes the mixture law") {
  RandomStream r1(31), r2(31);
  CHECK(urg::kt_sample(2, 30, r1) == urg::kt_sample(2, 30, r2));

  const int n = 3;
  std::vector<double> expected;
  Sequence x(2);
  x.syms.assign(n, 0);
  do {
    expected.push_back(std::exp2(urg::kt_sequence_log_prob(x)));
  } while (urg::next_sequence(x));
  RandomStream rng(32);
  std::vector<std::uint64_t> counts(expected.size(), 0);
  for (int t = 0; t < 100000; ++t) {
    Sequence s = urg::kt_sample(2, n, rng);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * 2 + s[i];
    ++counts[idx];
  }
  CHECK(urg::chi_square_gof(counts, expected).p_value > 1e-3);
}

TEST_CASE("side-information mixture reduces to plain counts under constant SI") {
  Sequence y = seq("000000");
  Sequence x(2);
  x.syms.assign(6, 0);
  do {
    CHECK(urg::kt_cond_log_prob(x, y) ==
          Catch::Approx(urg::kt_sequence_log_prob(x)).margin(1e-13));
  } while (urg::next_sequence(x));
}

TEST_CASE("side-information law sums to one for fixed SI") {
  for (const char* ys : {"010101", "001100", "011010"}) {
    Sequence y = seq(ys);
    double sum = 0;
    Sequence x(2);
    x.syms.assign(6, 0);
    do {
      sum += std::exp2(urg::kt_cond_log_prob(x, y));
    } while (urg::next_sequence(x));
    CHECK(sum == Catch::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("side-information counts split by SI symbol") {
  urg::CondMixtureState st(2, 2);
  st.observe(1, 0);
  st.observe(1, 0);
  st.observe(0, 1);
  CHECK(st.joint_count(1, 0) == 2);
  CHECK(st.joint_count(1, 1) == 0);
  CHECK(st.y_count(0) == 2);
  // bucket y=0 saw two 1s: (2 + 1/2) / (2 + 1)
  CHECK(st.conditional(1, 0) == Catch::Approx(2.5 / 3));
  // unseen bucket y=1 after one 0: (0 + 1/2)/(1 + 1) for x=1
  CHECK(st.conditional(1, 1) == Catch::Approx(0.5 / 2));
}

TEST_CASE("side-information sampler matches its law") {
  Sequence y = seq("010");
  std::vector<double> expected;
  Sequence x(2);
  x.syms.assign(3, 0);
  do {
    expected.push_back(std::exp2(urg::kt_cond_log_prob(x, y)));
  } while (urg::next_sequence(x));
  RandomStream rng(33);
  std::vector<std::uint64_t> counts(expected.size(), 0);
  for (int t = 0; t < 100000; ++t) {
    Sequence s = urg::kt_cond_sample(2, y, rng);
    std::size_t idx = 0;
    for (int i = 0; i < 3; ++i) idx = idx * 2 + s[i];
    ++counts[idx];
  }
  CHECK(urg::chi_square_gof(counts, expected).p_value > 1e-3);
}
