// SPDX-License-Identifier: MIT
//
// Release gate: ten end-to-end checks of the library's core guarantees.
// Each prints one "criterion N: PASS/FAIL - <what was checked>" line; the
// binary exits nonzero if any check fails. Kept separate from the unit suite
// so the gate can run (and be read) on its own.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "urg/urg.hpp"

namespace {

int g_failures = 0;

void report(int idx, bool pass, const std::string& what) {
  std::printf("criterion %2d: %s - %s\n", idx, pass ? "PASS" : "FAIL", what.c_str());
  if (!pass) ++g_failures;
}

// Pinned two-state bursty channel: sticky quiet state with faithful
// emissions, short noisy excursions with flipped emissions.
urg::HiddenMarkovSource burst_noise_hmm() {
  const double A[2][2] = {{0.98, 0.02}, {0.7, 0.3}};
  const double B[2][2] = {{0.98, 0.02}, {0.02, 0.98}};
  std::vector<double> k;
  for (int z = 0; z < 2; ++z)
    for (int x = 0; x < 2; ++x)
      for (int zp = 0; zp < 2; ++zp) k.push_back(B[z][x] * A[z][zp]);
  return urg::HiddenMarkovSource(urg::Alphabet::binary(), 2, 0, std::move(k));
}

double measured_exponent(const urg::MomentResult& m, int n) {
  return std::log2(m.value) / n;
}

// --------------------------------------------------------------------------

// 1: every leaf of the phrase-tree sampler carries probability exactly
// 1/(alpha + i(alpha-1)) after i births, in integer arithmetic.
void criterion_1() {
  bool pass = true;
  for (int alpha : {2, 3}) {
    urg::RandomStream rng(7);
    urg::PhraseTree tree(alpha);
    std::vector<int> path;
    for (int births = 0; births <= 20 && pass; ++births) {
      std::int64_t total = tree.total_leaves();
      if (total != alpha + static_cast<std::int64_t>(births) * (alpha - 1)) pass = false;
      struct Item {
        int node;
        unsigned __int128 num, den;
      };
      std::vector<Item> stack{{tree.root(), 1, 1}};
      while (!stack.empty() && pass) {
        Item it = stack.back();
        stack.pop_back();
        if (tree.is_leaf(it.node)) {
          if (it.num * static_cast<unsigned __int128>(total) != it.den) pass = false;
          continue;
        }
        for (int a = 0; a < alpha; ++a) {
          int ch = tree.child(it.node, a);
          stack.push_back({ch, it.num * static_cast<unsigned __int128>(tree.weight(ch)),
                           it.den * static_cast<unsigned __int128>(tree.weight(it.node))});
        }
      }
      path.assign(1, tree.root());
      int node = tree.root();
      while (!tree.is_leaf(node)) {
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
      }
      tree.birth(path);
    }
  }
  report(1, pass, "phrase-tree leaf law is exactly uniform through 20 births (alpha 2 and 3)");
}

// 2: every sampler induces a normalized law over {0,1}^6.
void criterion_2() {
  bool pass = true;
  const int n = 6;
  for (urg::Strategy s : {urg::Strategy::kt, urg::Strategy::lz_tree, urg::Strategy::lz_bits}) {
    double sum = 0;
    urg::Sequence x(2);
    for (int i = 0; i < n; ++i) x.syms.push_back(0);
    do {
      sum += std::exp2(urg::strategy_log2_prob(s, x));
    } while (urg::next_sequence(x));
    if (std::fabs(sum - 1.0) > 1e-9) pass = false;
  }
  for (const char* ytext : {"000000", "010101", "001100"}) {
    urg::Sequence y = urg::seq(ytext);
    double sum = 0;
    urg::Sequence x(2);
    for (int i = 0; i < n; ++i) x.syms.push_back(0);
    do {
      sum += std::exp2(urg::lz_cond_log_prob(x, y));
    } while (urg::next_sequence(x));
    if (std::fabs(sum - 1.0) > 1e-9) pass = false;
  }
  report(2, pass, "kt / lz-tree / lz-bits / lz-cond laws each sum to 1 at n=6 (tol 1e-9)");
}

// 3: sequential add-half mixture equals its gamma-function closed form.
void criterion_3() {
  bool pass = true;
  double worst = 0;
  for (int n = 1; n <= 16 && pass; ++n) {
    urg::Sequence x(2);
    for (int i = 0; i < n; ++i) x.syms.push_back(0);
    do {
      double d = std::fabs(urg::kt_sequence_log_prob(x) - urg::kt_closed_form_log_prob(x));
      worst = std::max(worst, d);
      if (d > 1e-10) {
        pass = false;
        break;
      }
    } while (urg::next_sequence(x));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "sequential vs closed-form mixture log-probs agree to 1e-10 for all n<=16 "
                "(worst %.3g)",
                worst);
  report(3, pass, buf);
}

// 4: the universal normalizer lies in [1, (n+1)^(alpha-1)], checked on exact
// integers.
void criterion_4() {
  bool pass = true;
  for (int alpha : {2, 3}) {
    for (int n = 1; n <= 12; ++n) {
      urg::ExactNormalizer z = urg::universal_normalizer_exact(alpha, n);
      unsigned __int128 num = z.numerator, den = z.denominator;
      unsigned __int128 cap = den;
      for (int i = 0; i < alpha - 1; ++i) cap *= static_cast<unsigned>(n + 1);
      if (num < den || num > cap) pass = false;
    }
  }
  report(4, pass, "universal normalizer sandwich 1 <= Z <= (n+1)^(alpha-1) exact for n<=12");
}

// 5: the probability-ordered list is never beaten, and each randomized
// strategy is dominated by the list built from the same ordering.
void criterion_5() {
  bool pass = true;
  urg::HiddenMarkovSource bern = urg::HiddenMarkovSource::bernoulli(0.2);
  urg::HiddenMarkovSource hmm = burst_noise_hmm();
  for (const urg::HiddenMarkovSource* src : {&bern, &hmm}) {
    urg::Log2ProbFn lp = [src](const urg::Sequence& x) { return urg::exact_log_prob(*src, x); };
    urg::Log2ProbFn kt_lp = [](const urg::Sequence& x) { return urg::kt_sequence_log_prob(x); };
    urg::Log2ProbFn lzb_lp = [](const urg::Sequence& x) { return urg::lz_bits_log_prob(x); };
    for (int n : {8, 10, 12}) {
      for (double rho : {0.5, 1.0, 2.0}) {
        double best = urg::list_moment(2, n, rho, urg::Ordering::probability_desc, lp).value;
        double ent = urg::list_moment(2, n, rho, urg::Ordering::entropy_asc, lp).value;
        double lzl = urg::list_moment(2, n, rho, urg::Ordering::lz_length_asc, lp).value;
        double rkt = urg::randomized_strategy_moment(2, n, rho, lp, kt_lp).value;
        double rlz = urg::randomized_strategy_moment(2, n, rho, lp, lzb_lp).value;
        const double slack = 1 + 1e-9;
        if (!(best <= ent * slack && ent <= rkt * slack)) pass = false;
        if (!(best <= lzl * slack && lzl <= rlz * slack)) pass = false;
      }
    }
  }
  report(5, pass,
         "moment dominance best-list <= entropy-list <= randomized-kt and best-list <= "
         "lz-list <= randomized-lz (two sources, n in {8,10,12}, rho in {0.5,1,2})");
}

// 6: the entropy-ordered list's measured exponent approaches the memoryless
// guessing exponent.
void criterion_6() {
  urg::HiddenMarkovSource bern = urg::HiddenMarkovSource::bernoulli(0.2);
  urg::Log2ProbFn lp = [&bern](const urg::Sequence& x) { return urg::exact_log_prob(bern, x); };
  double theory = urg::guessing_exponent(bern.memoryless_probs(), 1.0);
  std::vector<double> gaps;
  for (int n : {6, 10, 14}) {
    double m = measured_exponent(urg::list_moment(2, n, 1.0, urg::Ordering::entropy_asc, lp), n);
    gaps.push_back(std::fabs(m - theory));
  }
  bool pass = gaps[2] < 0.15 && gaps[0] > gaps[1] && gaps[1] > gaps[2];
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "entropy-list exponent gap to theory %.5f shrinks %.4f > %.4f > %.4f, final "
                "< 0.15 bits",
                theory, gaps[0], gaps[1], gaps[2]);
  report(6, pass, buf);
}

// 7: the normalized series-bound gap is identically 0 at rho=1 and shrinks
// with n elsewhere.
void criterion_7() {
  bool pass = true;
  for (double a : {0.1, 0.5, 1.0}) {
    for (int n : {5, 10, 20})
      if (urg::series_bound_check(a, 1.0, n).gap != 0.0) pass = false;
    for (double rho : {0.5, 2.0}) {
      double g5 = std::fabs(urg::series_bound_check(a, rho, 5).gap);
      double g10 = std::fabs(urg::series_bound_check(a, rho, 10).gap);
      double g20 = std::fabs(urg::series_bound_check(a, rho, 20).gap);
      if (!(g5 > g10 && g10 > g20)) pass = false;
      if (!(g20 <= 0.5)) pass = false;
    }
  }
  report(7, pass,
         "series-bound gap is exactly 0 at rho=1 and decreases with n (<=0.5 at n=20) on the "
         "a x rho grid");
}

// 8: the guess count concentrates double-exponentially for the balanced word.
void criterion_8() {
  urg::ConcentrationCheck c = urg::concentration_check(urg::seq("00110011"), 0.25);
  bool pass = c.holds && c.log_bound == -4.0 && c.log_tail <= c.log_bound;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "guess-count tail ln P = %.6f below double-exponential bound %.1f at eps=0.25",
                c.log_tail, c.log_bound);
  report(8, pass, buf);
}

// 9: the parse-complexity moment exponent tracks the lz-list exponent from
// above with a non-increasing gap.
void criterion_9() {
  urg::HiddenMarkovSource src = burst_noise_hmm();
  urg::Log2ProbFn lp = [&src](const urg::Sequence& x) { return urg::exact_log_prob(src, x); };
  std::vector<double> gaps;
  for (int n : {8, 12, 14}) {
    double upper = urg::clogc_moment_exact(2, n, 1.0, lp).exponent;
    double lower = measured_exponent(urg::list_moment(2, n, 1.0, urg::Ordering::lz_length_asc, lp), n);
    gaps.push_back(upper - lower);
  }
  bool pass = gaps[0] >= gaps[1] - 1e-9 && gaps[1] >= gaps[2] - 1e-9;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "parse-complexity vs lz-list exponent gap non-increasing: %.4f >= %.4f >= %.4f",
                gaps[0], gaps[1], gaps[2]);
  report(9, pass, buf);
}

// 10: pooled total-query distributions for 1 vs 8 agents are statistically
// indistinguishable (two-sample KS at significance 0.001, 1e4 trials each).
void criterion_10() {
  const int n = 20;
  urg::Sequence secret(2);
  for (int i = 0; i < n; ++i) secret.syms.push_back(0);
  auto guesser = urg::make_guesser(urg::Strategy::lz_bits, 2, n);

  auto run = [&](int agents, std::uint64_t master) {
    std::vector<double> totals;
    totals.reserve(10000);
    for (std::uint64_t t = 0; t < 10000; ++t) {
      std::uint64_t agent_seed = urg::RandomStream::derive(master, t).next_u64();
      urg::AttackTrace trace = urg::simulate_attack(secret, guesser, agents, agent_seed, 200000);
      totals.push_back(static_cast<double>(trace.total_queries));
    }
    return totals;
  };
  std::vector<double> one = run(1, 9001);
  std::vector<double> eight = run(8, 9002);
  urg::KsResult ks = urg::ks_two_sample(one, eight, 0.001);
  bool pass = !ks.reject;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "KS statistic %.5f below threshold %.5f: 1-agent vs 8-agent query laws match",
                ks.statistic, ks.threshold);
  report(10, pass, buf);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("all 10 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
