// SPDX-License-Identifier: MIT
//
// urg — CLI for the universal randomized guessing toolkit.
//
// Subcommands:
//   parse     incremental-parse a sequence (optionally against side info)
//   sample    draw guesses from a randomized strategy
//   attack    simulate the decentralized multi-agent brute-force attack
//   exponent  sweep measured guessing exponents against theory
//   verify    run the built-in invariant suites
//
// Contract: first stdout line is a JSON run manifest (command, version, seed,
// config echo); bulk rows go to --output (written atomically) or stdout;
// failures print a machine-readable JSON object on stderr and exit nonzero.
// Given the same config and seed, outputs are byte-identical.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "urg/urg.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write to '" + tmp.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("short write to '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

// Buffered sink so file outputs are atomic (temp + rename).
struct Sink {
  std::string path;  // empty = stdout
  std::string buf;

  void line(const std::string& s) {
    buf += s;
    buf += '\n';
  }
  void flush() {
    if (path.empty())
      std::fputs(buf.c_str(), stdout);
    else
      atomic_write(path, buf);
  }
};

std::uint64_t env_seed() {
  const char* v = std::getenv("URG_SEED");
  if (!v || !*v) return 0;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0')
    throw std::invalid_argument("URG_SEED must be an unsigned 64-bit integer");
  return static_cast<std::uint64_t>(parsed);
}

void print_manifest(const std::string& command, std::uint64_t seed, json config) {
  json m;
  m["command"] = command;
  m["version"] = urg::version();
  m["seed"] = seed;
  m["config"] = std::move(config);
  std::cout << m.dump() << "\n";
}

std::string read_first_line(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.empty()) throw std::invalid_argument("'" + path + "' is empty");
  return line;
}

// ---------------------------------------------------------------------------
// parse

struct ParseOpts {
  std::string input;
  std::string alphabet = "01";
  std::string si;
  std::string si_alphabet = "01";
  std::string output;
};

int run_parse(const ParseOpts& o) {
  urg::Alphabet ab(o.alphabet);
  urg::Sequence x = urg::make_sequence(ab, o.input);
  json out;
  out["alphabet"] = o.alphabet;
  out["n"] = x.n();
  if (o.si.empty()) {
    urg::ParseResult r = urg::lz78_parse(x);
    out["c"] = r.c;
    out["c_all"] = r.c_all();
    out["last_complete"] = r.last_complete;
    out["code_length"] = r.code_length;
    json phrases = json::array();
    for (std::size_t j = 0; j < r.phrases.size(); ++j) {
      json ph;
      ph["prefix"] = r.phrases[j].first;
      ph["symbol"] = std::string(1, ab.symbol(r.phrases[j].second));
      ph["length"] = r.lengths[j];
      phrases.push_back(std::move(ph));
    }
    out["phrases"] = std::move(phrases);
  } else {
    urg::Alphabet yab(o.si_alphabet);
    urg::Sequence y = urg::make_sequence(yab, o.si);
    urg::ConditionalParseResult r = urg::joint_parse(x, y);
    out["si"] = o.si;
    out["c_xy"] = r.c_xy;
    out["c_y"] = r.c_y;
    out["u"] = r.u;
    out["conditional_code_length"] = r.conditional_code_length;
    out["last_complete"] = r.last_complete;
    json buckets = json::array();
    for (std::size_t l = 0; l < r.c_l.size(); ++l)
      buckets.push_back(json{{"y_len", r.y_phrase_len[l]}, {"count", r.c_l[l]}});
    out["buckets"] = std::move(buckets);
  }
  Sink sink{o.output, {}};
  sink.line(out.dump(2));
  sink.flush();
  return 0;
}

// ---------------------------------------------------------------------------
// sample

struct SampleOpts {
  std::string strategy = "kt";
  int n = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int count = 1;
  std::string alphabet = "01";
  std::string si_file;
  std::string si;
  std::string si_alphabet = "01";
  bool explain = false;
  std::string output;
};

int run_sample(const SampleOpts& o) {
  urg::Strategy strat = urg::parse_strategy(o.strategy);
  urg::Alphabet ab(o.alphabet);
  std::optional<urg::Sequence> si;
  if (!o.si.empty() || !o.si_file.empty()) {
    std::string text = !o.si.empty() ? o.si : read_first_line(o.si_file);
    si = urg::make_sequence(urg::Alphabet(o.si_alphabet), text);
  }
  int n = o.n;
  if (strat == urg::Strategy::lz_cond) {
    if (!si) throw std::invalid_argument("lz-cond sampling requires --si or --si-file");
    if (n == 0) n = si->n();
  }
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  if (o.count < 1) throw std::invalid_argument("--count must be >= 1");

  urg::RandomStream rng(o.seed);
  Sink sink{o.output, {}};
  json sidecar = json::array();
  for (int i = 0; i < o.count; ++i) {
    urg::Sequence g = urg::strategy_sample(strat, ab.size(), n, rng, si ? &*si : nullptr);
    sink.line(urg::render(ab, g));
    if (o.explain) {
      json row;
      row["guess"] = urg::render(ab, g);
      row["log2_prob"] = urg::strategy_log2_prob(strat, g, si ? &*si : nullptr);
      sidecar.push_back(std::move(row));
    }
  }
  sink.flush();
  if (o.explain) {
    std::string text = sidecar.dump(2) + "\n";
    if (o.output.empty())
      std::fputs(text.c_str(), stdout);
    else
      atomic_write(o.output + ".explain.json", text);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// attack

struct AttackOpts {
  std::string source_file;
  std::string strategy = "lz-bits";
  int agents = 1;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t max_queries = 1000000;
  int n = 0;
  std::string secret;  // fixed secret; drawn from the source when empty
  std::string format = "csv";
  std::string output;
};

int run_attack(const AttackOpts& o) {
  urg::Strategy strat = urg::parse_strategy(o.strategy);
  json spec = urg::detail::parse_spec_file(o.source_file);
  const bool joint = urg::source_spec_is_joint(spec);
  if (joint && strat != urg::Strategy::lz_cond)
    throw std::invalid_argument("joint source spec requires --strategy lz-cond");
  if (!joint && strat == urg::Strategy::lz_cond)
    throw std::invalid_argument("lz-cond attack requires a joint source spec");
  std::optional<urg::HiddenMarkovSource> hmm;
  std::optional<urg::JointHiddenMarkovSource> joint_src;
  int alpha = 0;
  urg::Alphabet ab = urg::Alphabet::binary();
  if (joint) {
    joint_src = urg::load_joint_source(spec);
    alpha = joint_src->alpha_x();
    ab = joint_src->x_alphabet();
  } else {
    hmm = urg::load_hmm_source(spec);
    alpha = hmm->alpha();
    ab = hmm->alphabet();
  }
  if (o.n < 1 && o.secret.empty())
    throw std::invalid_argument("need --n (secret length) or --secret");
  std::optional<urg::Sequence> fixed_secret;
  if (!o.secret.empty()) {
    fixed_secret = urg::make_sequence(ab, o.secret);
    if (joint) throw std::invalid_argument("--secret cannot be used with a joint source");
  }
  int n = fixed_secret ? fixed_secret->n() : o.n;
  if (o.agents < 1) throw std::invalid_argument("--agents must be >= 1");
  if (o.trials < 1) throw std::invalid_argument("--trials must be >= 1");

  Sink sink{o.output, {}};
  json rows = json::array();
  if (o.format == "csv") sink.line("trial,total_queries,rounds,success");
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    // stream 2t draws the secret, stream 2t+1 seeds the agents
    urg::RandomStream secret_rng = urg::RandomStream::derive(o.seed, 2 * t);
    std::uint64_t agent_seed = urg::RandomStream::derive(o.seed, 2 * t + 1).next_u64();
    urg::Sequence secret(alpha);
    std::optional<urg::Sequence> si;
    if (joint) {
      auto pair = urg::generate_joint(*joint_src, n, secret_rng);
      secret = std::move(pair.first);
      si = std::move(pair.second);
    } else if (fixed_secret) {
      secret = *fixed_secret;
    } else {
      secret = urg::generate(*hmm, n, secret_rng);
    }
    auto guess = urg::make_guesser(strat, alpha, n, si);
    urg::AttackTrace trace = urg::simulate_attack(secret, guess, o.agents, agent_seed,
                                                  o.max_queries);
    if (o.format == "csv") {
      std::ostringstream row;
      row << t << ',' << trace.total_queries << ',' << trace.rounds << ','
          << (trace.success ? 1 : 0);
      sink.line(row.str());
    } else {
      rows.push_back(json{{"trial", t},
                          {"total_queries", trace.total_queries},
                          {"rounds", trace.rounds},
                          {"success", trace.success}});
    }
  }
  if (o.format == "json") sink.line(rows.dump(2));
  sink.flush();
  return 0;
}

// ---------------------------------------------------------------------------
// exponent

struct ExponentOpts {
  std::string source_file;
  std::vector<double> rhos{1.0};
  std::vector<int> ns{8};
  std::vector<std::string> strategies{"entropy-list"};
  std::uint64_t seed = 0;
  std::uint64_t mc_trials = 0;  // 0 = exact enumeration only
  std::string format = "csv";
  std::string output;
};

int run_exponent(const ExponentOpts& o) {
  urg::HiddenMarkovSource src = urg::load_hmm_source_file(o.source_file);
  const int alpha = src.alpha();
  urg::Log2ProbFn src_lp = [&src](const urg::Sequence& x) { return urg::exact_log_prob(src, x); };

  Sink sink{o.output, {}};
  json rows = json::array();
  if (o.format == "csv") sink.line("strategy,n,rho,measured,theory,gap");

  for (const std::string& sname : o.strategies) {
    for (int n : o.ns) {
      for (double rho : o.rhos) {
        double measured = 0;
        bool exact_fits = urg::sequence_space_size(alpha, n) <= urg::kListGuard;
        if (sname == "prob-list" || sname == "entropy-list" || sname == "lz-list") {
          urg::Ordering ord = sname == "prob-list"    ? urg::Ordering::probability_desc
                              : sname == "entropy-list" ? urg::Ordering::entropy_asc
                                                        : urg::Ordering::lz_length_asc;
          measured = std::log2(urg::list_moment(alpha, n, rho, ord, src_lp).value) / n;
        } else if (sname == "clogc") {
          urg::ClogcEstimate est =
              exact_fits ? urg::clogc_moment_exact(alpha, n, rho, src_lp)
                         : urg::clogc_moment_monte_carlo(
                               [&](urg::RandomStream& r) { return urg::generate(src, n, r); }, n,
                               rho, o.mc_trials ? o.mc_trials : 100000, o.seed);
          measured = est.exponent;
        } else {
          urg::Strategy strat = urg::parse_strategy(sname);
          if (strat == urg::Strategy::lz_cond)
            throw std::invalid_argument("lz-cond needs a joint experiment; not supported here");
          if (exact_fits && !(strat == urg::Strategy::lz_bits && n > urg::kHistoryDfsMaxN)) {
            urg::Log2ProbFn strat_lp = [strat](const urg::Sequence& x) {
              return urg::strategy_log2_prob(strat, x);
            };
            measured =
                std::log2(urg::randomized_strategy_moment(alpha, n, rho, src_lp, strat_lp).value) /
                n;
          } else if (o.mc_trials > 0) {
            urg::MonteCarloMoment mc = urg::randomized_moment_monte_carlo(
                [&](urg::RandomStream& r) { return urg::generate(src, n, r); },
                [&, strat](urg::RandomStream& r) {
                  return urg::strategy_sample(strat, alpha, n, r);
                },
                rho, o.mc_trials, o.seed);
            measured = std::log2(mc.value) / n;
          } else {
            throw std::invalid_argument("n too large for exact enumeration of '" + sname +
                                        "'; pass --mc-trials");
          }
        }
        double theory = std::numeric_limits<double>::quiet_NaN();
        if (src.is_memoryless()) theory = urg::guessing_exponent(src.memoryless_probs(), rho);
        double gap = measured - theory;
        if (o.format == "csv") {
          std::ostringstream row;
          row << sname << ',' << n << ',' << fmt(rho) << ',' << fmt(measured) << ',';
          if (std::isnan(theory))
            row << ',';
          else
            row << fmt(theory) << ',' << fmt(gap);
          sink.line(row.str());
        } else {
          json r{{"strategy", sname}, {"n", n}, {"rho", rho}, {"measured", measured}};
          if (!std::isnan(theory)) {
            r["theory"] = theory;
            r["gap"] = gap;
          }
          rows.push_back(std::move(r));
        }
      }
    }
  }
  if (o.format == "json") sink.line(rows.dump(2));
  sink.flush();
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyState {
  int failures = 0;
  void report(const std::string& suite, bool ok, const std::string& detail = "") {
    if (ok) {
      std::cout << "ok " << suite << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << suite << (detail.empty() ? "" : ": " + detail) << "\n";
    }
  }
};

// Exact leaf-probability law of the weighted phrase tree, checked in integer
// arithmetic: every leaf's product of branch ratios must equal 1/total.
bool verify_leaf_law(std::string& detail) {
  for (int alpha : {2, 3}) {
    urg::RandomStream rng(7);
    urg::PhraseTree tree(alpha);
    std::vector<int> path;
    for (int births = 0; births <= 20; ++births) {
      // DFS all leaves: product over edges of w(child)/w(node) == 1/total
      std::int64_t total = tree.total_leaves();
      if (total != alpha + static_cast<std::int64_t>(births) * (alpha - 1)) {
        detail = "total leaves wrong after " + std::to_string(births) + " births";
        return false;
      }
      struct Item {
        int node;
        unsigned __int128 num, den;
      };
      std::vector<Item> stack{{tree.root(), 1, 1}};
      while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (tree.is_leaf(it.node)) {
          if (it.num * static_cast<unsigned __int128>(total) != it.den) {
            detail = "leaf probability != 1/total at births=" + std::to_string(births);
            return false;
          }
          continue;
        }
        for (int a = 0; a < alpha; ++a) {
          int ch = tree.child(it.node, a);
          stack.push_back({ch,
                           it.num * static_cast<unsigned __int128>(tree.weight(ch)),
                           it.den * static_cast<unsigned __int128>(tree.weight(it.node))});
        }
      }
      // random walk to a leaf, then birth
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
  return true;
}

bool verify_kraft(std::string& detail) {
  for (std::uint64_t m = 1; m <= 256; ++m) {
    urg::CompleteBinaryCodeTree tree(m);
    unsigned __int128 sum = 0;
    int L = tree.max_depth();
    for (std::uint64_t k = 0; k < m; ++k)
      sum += static_cast<unsigned __int128>(1) << (L - tree.depth_of(k));
    if (sum != static_cast<unsigned __int128>(1) << L) {
      detail = "complete tree Kraft violated at m=" + std::to_string(m);
      return false;
    }
  }
  // pruned integer trees over assorted valid-length sets
  std::vector<std::vector<int>> sets = {{1},          {1, 2},       {1, 3},
                                        {1, 2, 3, 4}, {2, 5, 9},    {1, 2, 3, 5, 8, 13},
                                        {4},          {1, 2, 4, 8, 16, 32}};
  for (const auto& vals : sets) {
    urg::IntegerCodeTree tree(vals);
    int dmax = 0;
    for (const auto& [v, d] : tree.leaf_depths()) dmax = std::max(dmax, d);
    unsigned __int128 sum = 0;
    for (const auto& [v, d] : tree.leaf_depths())
      sum += static_cast<unsigned __int128>(1) << (dmax - d);
    if (sum != static_cast<unsigned __int128>(1) << dmax) {
      detail = "integer tree Kraft violated";
      return false;
    }
  }
  return true;
}

bool verify_normalization(std::string& detail) {
  const int n = 6;
  double skt = 0, st = 0, sb = 0;
  urg::Sequence x(2);
  x.syms.assign(n, 0);
  do {
    skt += std::exp2(urg::kt_sequence_log_prob(x));
    st += std::exp2(urg::lz_tree_log_prob(x));
    sb += std::exp2(urg::lz_bits_log_prob(x));
  } while (urg::next_sequence(x));
  if (std::fabs(skt - 1) > 1e-9 || std::fabs(st - 1) > 1e-9 || std::fabs(sb - 1) > 1e-9) {
    detail = "kt/lz-tree/lz-bits law sums: " + fmt(skt) + " " + fmt(st) + " " + fmt(sb);
    return false;
  }
  for (const char* ys : {"000000", "010101", "001100"}) {
    urg::Sequence y = urg::seq(ys);
    double sc = 0;
    urg::Sequence xx(2);
    xx.syms.assign(n, 0);
    do {
      sc += std::exp2(urg::lz_cond_log_prob(xx, y));
    } while (urg::next_sequence(xx));
    if (std::fabs(sc - 1) > 1e-9) {
      detail = std::string("lz-cond law sum for y=") + ys + ": " + fmt(sc);
      return false;
    }
  }
  return true;
}

bool verify_kt_closed_form(std::string& detail) {
  for (int n = 1; n <= 12; ++n) {
    urg::Sequence x(2);
    x.syms.assign(n, 0);
    do {
      double a = urg::kt_sequence_log_prob(x);
      double b = urg::kt_closed_form_log_prob(x);
      if (std::fabs(a - b) > 1e-10) {
        detail = "mismatch at n=" + std::to_string(n);
        return false;
      }
    } while (urg::next_sequence(x));
  }
  return true;
}

bool verify_series_bound(std::string& detail) {
  for (double a : {0.1, 0.5, 1.0}) {
    for (int n : {5, 10, 20}) {
      if (urg::series_bound_check(a, 1.0, n).gap != 0.0) {
        detail = "rho=1 gap nonzero";
        return false;
      }
    }
    for (double rho : {0.5, 2.0}) {
      double prev = std::numeric_limits<double>::infinity();
      for (int n : {5, 10, 20}) {
        double g = std::fabs(urg::series_bound_check(a, rho, n).gap);
        if (g >= prev) {
          detail = "gap magnitude not decreasing at a=" + fmt(a) + " rho=" + fmt(rho);
          return false;
        }
        prev = g;
        if (n == 20 && g > 0.5) {
          detail = "gap exceeds 0.5 at n=20";
          return false;
        }
      }
    }
  }
  return true;
}

urg::HiddenMarkovSource burst_noise_hmm() {
  // A[z][z'] state chain with per-state emissions B[z][x]; K = B ⊙ A
  const double A[2][2] = {{0.98, 0.02}, {0.7, 0.3}};
  const double B[2][2] = {{0.98, 0.02}, {0.02, 0.98}};
  std::vector<double> k;
  for (int z = 0; z < 2; ++z)
    for (int x = 0; x < 2; ++x)
      for (int zp = 0; zp < 2; ++zp) k.push_back(B[z][x] * A[z][zp]);
  return urg::HiddenMarkovSource(urg::Alphabet::binary(), 2, 0, std::move(k));
}

bool verify_sandwich_trend(std::string& detail) {
  urg::HiddenMarkovSource src = burst_noise_hmm();
  urg::Log2ProbFn lp = [&src](const urg::Sequence& x) { return urg::exact_log_prob(src, x); };
  double prev = std::numeric_limits<double>::infinity();
  for (int n : {8, 12, 14}) {
    double predictor = urg::clogc_moment_exact(2, n, 1.0, lp).exponent;
    double measured =
        std::log2(urg::list_moment(2, n, 1.0, urg::Ordering::lz_length_asc, lp).value) / n;
    double gap = predictor - measured;
    if (gap > prev + 1e-12) {
      detail = "gap increased at n=" + std::to_string(n);
      return false;
    }
    prev = gap;
  }
  return true;
}

bool verify_oracle_optimality(std::string& detail) {
  std::vector<urg::HiddenMarkovSource> sources{urg::HiddenMarkovSource::bernoulli(0.2),
                                               burst_noise_hmm()};
  for (const auto& src : sources) {
    urg::Log2ProbFn lp = [&src](const urg::Sequence& x) { return urg::exact_log_prob(src, x); };
    for (int n : {4, 6, 8}) {
      for (double rho : {0.5, 1.0, 2.0}) {
        double best =
            urg::list_moment(2, n, rho, urg::Ordering::probability_desc, lp).value;
        for (urg::Ordering ord : {urg::Ordering::entropy_asc, urg::Ordering::lz_length_asc}) {
          if (best > urg::list_moment(2, n, rho, ord, lp).value + 1e-9) {
            detail = "probability ordering not optimal at n=" + std::to_string(n);
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool verify_determinism(std::string& detail) {
  for (urg::Strategy s : {urg::Strategy::kt, urg::Strategy::lz_tree, urg::Strategy::lz_bits}) {
    urg::RandomStream r1(42), r2(42);
    if (!(urg::strategy_sample(s, 2, 24, r1) == urg::strategy_sample(s, 2, 24, r2))) {
      detail = std::string("strategy ") + urg::strategy_name(s);
      return false;
    }
  }
  urg::Sequence y = urg::seq("00110100");
  urg::RandomStream r1(42), r2(42);
  if (!(urg::lz_cond_sample(2, y, r1) == urg::lz_cond_sample(2, y, r2))) {
    detail = "strategy lz-cond";
    return false;
  }
  return true;
}

bool verify_universal_sandwich(std::string& detail) {
  for (int alpha : {2, 3}) {
    for (int n = 1; n <= 12; ++n) {
      urg::ExactNormalizer z = urg::universal_normalizer_exact(alpha, n);
      // 1 <= Z <= (n+1)^{alpha-1} as exact integers: den <= num <= den*(n+1)^{alpha-1}
      unsigned __int128 num = z.numerator, den = z.denominator;
      unsigned __int128 cap = den;
      for (int i = 0; i < alpha - 1; ++i) cap *= static_cast<unsigned>(n + 1);
      if (num < den || num > cap) {
        detail = "normalizer outside sandwich at alpha=" + std::to_string(alpha) +
                 " n=" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

int run_verify() {
  VerifyState st;
  std::string detail;
  auto run = [&](const char* name, bool (*fn)(std::string&)) {
    detail.clear();
    bool ok = false;
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    st.report(name, ok, detail);
  };
  run("leaf-law", verify_leaf_law);
  run("kraft-equalities", verify_kraft);
  run("sampler-normalization", verify_normalization);
  run("kt-closed-form", verify_kt_closed_form);
  run("series-bound-grid", verify_series_bound);
  run("normalizer-sandwich", verify_universal_sandwich);
  run("sandwich-trend", verify_sandwich_trend);
  run("oracle-optimality", verify_oracle_optimality);
  run("sampler-determinism", verify_determinism);
  if (st.failures == 0) {
    std::cout << "all invariant suites passed\n";
    return 0;
  }
  std::cout << st.failures << " suite(s) failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"urg — universal randomized guessing toolkit"};
  app.require_subcommand(1);

  ParseOpts po;
  SampleOpts so;
  AttackOpts ao;
  ExponentOpts eo;

  CLI::App* parse_cmd = app.add_subcommand("parse", "incremental-parse a sequence");
  parse_cmd->add_option("--input", po.input, "sequence text")->required();
  parse_cmd->add_option("--alphabet", po.alphabet, "alphabet characters (default 01)");
  parse_cmd->add_option("--si", po.si, "side-information sequence text (conditional parse)");
  parse_cmd->add_option("--si-alphabet", po.si_alphabet, "side-information alphabet");
  parse_cmd->add_option("--output", po.output, "write JSON here instead of stdout");

  CLI::App* sample_cmd = app.add_subcommand("sample", "draw guesses from a strategy");
  sample_cmd->add_option("--strategy", so.strategy, "kt | lz-tree | lz-bits | lz-cond");
  sample_cmd->add_option("--n", so.n, "guess length");
  sample_cmd->add_option("--seed", so.seed, "RNG seed")->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--count", so.count, "number of guesses");
  sample_cmd->add_option("--alphabet", so.alphabet, "alphabet characters");
  sample_cmd->add_option("--si-file", so.si_file, "file whose first line is the SI sequence");
  sample_cmd->add_option("--si", so.si, "inline SI sequence");
  sample_cmd->add_option("--si-alphabet", so.si_alphabet, "SI alphabet characters");
  sample_cmd->add_flag("--explain", so.explain, "emit JSON sidecar of per-guess log2 probs");
  sample_cmd->add_option("--output", so.output, "write guesses here instead of stdout");

  CLI::App* attack_cmd = app.add_subcommand("attack", "simulate the decentralized attack");
  attack_cmd->add_option("--source-file", ao.source_file, "JSON source spec")->required();
  attack_cmd->add_option("--strategy", ao.strategy, "kt | lz-tree | lz-bits | lz-cond");
  attack_cmd->add_option("--agents", ao.agents, "number of agents K");
  attack_cmd->add_option("--trials", ao.trials, "number of independent trials");
  attack_cmd->add_option("--seed", ao.seed, "master seed");
  attack_cmd->add_option("--max-queries", ao.max_queries, "pooled query budget per trial");
  attack_cmd->add_option("--n", ao.n, "secret length (secret drawn per trial)");
  attack_cmd->add_option("--secret", ao.secret, "fixed secret text (overrides drawing)");
  attack_cmd->add_option("--format", ao.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  attack_cmd->add_option("--output", ao.output, "write rows here instead of stdout");

  CLI::App* exp_cmd = app.add_subcommand("exponent", "measured exponents vs theory");
  exp_cmd->add_option("--source-file", eo.source_file, "JSON source spec")->required();
  exp_cmd->add_option("--rho", eo.rhos, "moment orders");
  exp_cmd->add_option("--n", eo.ns, "sequence lengths");
  exp_cmd->add_option("--strategies", eo.strategies,
                      "prob-list | entropy-list | lz-list | kt | lz-tree | lz-bits | clogc");
  exp_cmd->add_option("--seed", eo.seed, "Monte Carlo seed");
  exp_cmd->add_option("--mc-trials", eo.mc_trials, "Monte Carlo trials when exact is infeasible");
  exp_cmd->add_option("--format", eo.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  exp_cmd->add_option("--output", eo.output, "write rows here instead of stdout");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the built-in invariant suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse_cmd->parsed()) {
      print_manifest("parse", 0,
                     json{{"input", po.input}, {"alphabet", po.alphabet}, {"si", po.si}});
      return run_parse(po);
    }
    if (sample_cmd->parsed()) {
      if (sample_cmd->count("--seed") == 0) so.seed = env_seed();
      print_manifest("sample", so.seed,
                     json{{"strategy", so.strategy},
                          {"n", so.n},
                          {"count", so.count},
                          {"alphabet", so.alphabet},
                          {"si", so.si},
                          {"si_file", so.si_file},
                          {"explain", so.explain}});
      return run_sample(so);
    }
    if (attack_cmd->parsed()) {
      if (attack_cmd->count("--seed") == 0) ao.seed = env_seed();
      print_manifest("attack", ao.seed,
                     json{{"source_file", ao.source_file},
                          {"strategy", ao.strategy},
                          {"agents", ao.agents},
                          {"trials", ao.trials},
                          {"max_queries", ao.max_queries},
                          {"n", ao.n},
                          {"secret", ao.secret},
                          {"format", ao.format}});
      return run_attack(ao);
    }
    if (exp_cmd->parsed()) {
      if (exp_cmd->count("--seed") == 0) eo.seed = env_seed();
      print_manifest("exponent", eo.seed,
                     json{{"source_file", eo.source_file},
                          {"rho", eo.rhos},
                          {"n", eo.ns},
                          {"strategies", eo.strategies},
                          {"mc_trials", eo.mc_trials},
                          {"format", eo.format}});
      return run_exponent(eo);
    }
    if (verify_cmd->parsed()) {
      print_manifest("verify", 0, json::object());
      return run_verify();
    }
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 2;
}
