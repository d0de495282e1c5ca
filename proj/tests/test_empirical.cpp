// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "urg/empirical.hpp"

using urg::Sequence;
using urg::seq;

TEST_CASE("integer log table matches log2 with the 0 convention") {
  CHECK(urg::log2_int(0) == 0.0);
  CHECK(urg::log2_int(1) == 0.0);
  CHECK(urg::log2_int(2) == 1.0);
  CHECK(urg::log2_int(12) == Catch::Approx(std::log2(12.0)).epsilon(1e-15));
}

TEST_CASE("empirical entropy of balanced and degenerate types") {
  CHECK(urg::empirical_entropy(seq("0011")) == 1.0);
  CHECK(urg::empirical_entropy(seq("0000")) == 0.0);
  CHECK(urg::empirical_entropy(seq("0001")) ==
        Catch::Approx(2.0 - 0.75 * std::log2(3.0)).epsilon(1e-14));
  Sequence t(3);
  t.syms = {0, 1, 2};
  CHECK(urg::empirical_entropy(t) == Catch::Approx(std::log2(3.0)).epsilon(1e-15));
}

TEST_CASE("equal types give bit-identical entropies") {
  CHECK(urg::empirical_entropy(seq("0101")) == urg::empirical_entropy(seq("1100")));
  CHECK(urg::empirical_entropy(seq("00101")) == urg::empirical_entropy(seq("10010")));
}

TEST_CASE("conditional entropy equals joint minus marginal") {
  Sequence x = seq("0110100110");
  Sequence y = seq("0011011000");
  urg::JointEmpiricalDist j = urg::JointEmpiricalDist::of(x, y);
  urg::EmpiricalDist ym = urg::EmpiricalDist::of(y);
  double direct = urg::conditional_empirical_entropy(x, y);
  double chained = urg::entropy_of_counts(j.counts, j.n) - urg::entropy_of_counts(ym.counts, ym.n);
  CHECK(direct == chained);
  CHECK(j.at(0, 0) + j.at(0, 1) + j.at(1, 0) + j.at(1, 1) == 10);
  // conditioning on an independent constant changes nothing
  CHECK(urg::conditional_empirical_entropy(x, seq("0000000000")) ==
        Catch::Approx(urg::empirical_entropy(x)).margin(1e-14));
}

TEST_CASE("universal weight is the type-size exponent") {
  CHECK(urg::universal_weight(seq("0011")) == Catch::Approx(-4.0).epsilon(1e-14));
  CHECK(urg::universal_weight(seq("0000")) == 0.0);
  CHECK(urg::conditional_universal_weight(seq("0011"), seq("0101")) ==
        Catch::Approx(-4.0 * urg::conditional_empirical_entropy(seq("0011"), seq("0101")))
            .epsilon(1e-14));
}

TEST_CASE("normalized universal distribution is a law with the exact normalizer") {
  for (int alpha : {2, 3}) {
    for (int n : {1, 2, 5, 8}) {
      urg::UniversalDist d = urg::universal_dist_exact(alpha, n);
      double sum = 0;
      for (double p : d.probs) sum += p;
      CHECK(sum == Catch::Approx(1.0).epsilon(1e-12));
      urg::ExactNormalizer z = urg::universal_normalizer_exact(alpha, n);
      CHECK(d.normalizer ==
            Catch::Approx(static_cast<double>(z.numerator) / static_cast<double>(z.denominator))
                .epsilon(1e-12));
    }
  }
  // alpha=2, n=1: both singleton types weigh 1, so Z = 2 exactly
  urg::ExactNormalizer z1 = urg::universal_normalizer_exact(2, 1);
  CHECK(z1.numerator == 2);
  CHECK(z1.denominator == 1);
}

TEST_CASE("exact normalizer respects the polynomial sandwich") {
  for (int alpha : {2, 3}) {
    for (int n = 1; n <= 12; ++n) {
      urg::ExactNormalizer z = urg::universal_normalizer_exact(alpha, n);
      unsigned __int128 cap = z.denominator;
      for (int i = 0; i < alpha - 1; ++i) cap *= static_cast<unsigned>(n + 1);
      CHECK(z.numerator >= z.denominator);               // Z >= 1
      CHECK(static_cast<unsigned __int128>(z.numerator) <= cap);  // Z <= (n+1)^{alpha-1}
    }
  }
}

TEST_CASE("enumeration guards reject out-of-range shapes") {
  CHECK_THROWS_AS(urg::universal_dist_exact(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(urg::universal_dist_exact(2, 15), std::invalid_argument);
  CHECK_THROWS_AS(urg::universal_normalizer_exact(2, 0), std::invalid_argument);
}
