// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "urg/rng.hpp"
#include "urg/stats.hpp"

using urg::RandomStream;
using urg::splitmix64;

TEST_CASE("splitmix64 matches the reference output stream") {
  std::uint64_t s = 0;
  CHECK(splitmix64(s) == 0xE220A8397B1DCDAFULL);
  CHECK(splitmix64(s) == 0x6E789E6AA1B965F4ULL);
  CHECK(splitmix64(s) == 0x06C45D188009454FULL);
  s = 1234567;
  CHECK(splitmix64(s) == 0x599ED017FB08FC85ULL);
  CHECK(splitmix64(s) == 0x2C73F08458540FA5ULL);
}

TEST_CASE("same seed gives the same stream") {
  RandomStream a(99), b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("derived streams differ across ids and match across calls") {
  RandomStream a = RandomStream::derive(5, 0);
  RandomStream b = RandomStream::derive(5, 1);
  RandomStream a2 = RandomStream::derive(5, 0);
  CHECK(a.next_u64() != b.next_u64());
  RandomStream a3 = RandomStream::derive(5, 0);
  CHECK(a2.next_u64() == a3.next_u64());
}

TEST_CASE("next_bit consumes words MSB-first") {
  RandomStream bits(7), words(7);
  for (int w = 0; w < 4; ++w) {
    std::uint64_t expect = words.next_u64();
    std::uint64_t got = 0;
    for (int i = 0; i < 64; ++i) got = (got << 1) | static_cast<std::uint64_t>(bits.next_bit());
    CHECK(got == expect);
  }
}

TEST_CASE("next_below stays in range and is unbiased") {
  RandomStream rng(11);
  std::vector<std::uint64_t> counts(5, 0);
  for (int i = 0; i < 100000; ++i) {
    std::uint64_t v = rng.next_below(5);
    REQUIRE(v < 5);
    ++counts[static_cast<std::size_t>(v)];
  }
  urg::ChiSquareResult gof = urg::chi_square_gof(counts, {0.2, 0.2, 0.2, 0.2, 0.2});
  CHECK(gof.p_value > 1e-3);
  CHECK(rng.next_below(1) == 0);
  CHECK_THROWS_AS(rng.next_below(0), std::invalid_argument);
}

TEST_CASE("next_unit lies in [0, 1)") {
  RandomStream rng(3);
  double sum = 0;
  for (int i = 0; i < 20000; ++i) {
    double u = rng.next_unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 20000 == Catch::Approx(0.5).margin(0.01));
}
