// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wtspec/algebra/random.hpp"
#include "wtspec/cli/dispatch.hpp"
#include "wtspec/cli/suites.hpp"
#include "wtspec/codes/reed_solomon.hpp"
#include "wtspec/codes/spectrum.hpp"
#include "wtspec/ensemble/ensemble.hpp"
#include "wtspec/ensemble/independence.hpp"
#include "wtspec/enumerators/enumerators.hpp"
#include "wtspec/error.hpp"
#include "wtspec/io/serialize.hpp"

using namespace wtspec;
using algebra::Elem;
using algebra::Field;
using algebra::FieldPtr;
using algebra::Matrix;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

// Spectrum by encoding every message and deduplicating codewords.
std::vector<BigInt> brute_spectrum(const Matrix& g) {
  const auto& f = g.field();
  const std::size_t k = g.rows(), n = g.cols();
  std::set<std::vector<std::uint32_t>> words;
  std::vector<std::uint32_t> x(k, 0);
  for (;;) {
    std::vector<std::uint32_t> word(n);
    for (std::size_t c = 0; c < n; ++c) {
      Elem acc{0};
      for (std::size_t r = 0; r < k; ++r) acc = f.add(acc, f.mul(Elem{x[r]}, g(r, c)));
      word[c] = acc.value;
    }
    words.insert(word);
    std::size_t i = 0;
    while (i < k && ++x[i] == f.q()) x[i++] = 0;
    if (i == k) break;
  }
  std::vector<BigInt> spec(n + 1, BigInt(0));
  for (const auto& w : words) {
    std::size_t wt = 0;
    for (auto v : w) wt += v != 0;
    spec[wt] += 1;
  }
  return spec;
}

// Full rank of a binary 2 x n matrix: rows nonzero and distinct.
bool binary_two_rows_independent(std::uint32_t r0, std::uint32_t r1) { return r0 != 0 && r1 != 0 && r0 != r1; }

ensemble::EnsembleConfig config(std::size_t n, std::size_t k, std::uint32_t p, std::uint32_t m,
                                std::uint64_t samples, std::uint64_t seed, codes::Strategy strategy) {
  ensemble::EnsembleConfig c;
  c.n = n;
  c.k = k;
  c.p = p;
  c.m = m;
  c.samples = samples;
  c.master_seed = seed;
  c.strategy = strategy;
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Shared by criteria 3 and 4.
const ensemble::EnsembleResult& mean_run() {
  static const ensemble::EnsembleResult r =
      ensemble::run_ensemble(config(6, 3, 2, 3, 4000, 20240601, codes::Strategy::Auto));
  return r;
}

Outcome mds_exactness() {
  Outcome o;
  const std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> params{
      {4, 2, 5}, {6, 3, 7}, {8, 4, 9}, {10, 5, 11}};
  for (const auto& c : cli::mds_exactness(params)) {
    const std::string tag = "[" + std::to_string(c.n) + "," + std::to_string(c.k) + "]_" + std::to_string(c.q);
    o.require(c.equal, tag + " enumeration != formula");
    o.require(c.is_mds, tag + " not MDS");
    std::uint32_t p = 0, m = 0;
    algebra::prime_power(c.q, &p, &m);
    if (c.k <= 4) {
      const auto rs = codes::reed_solomon(Field::create(p, m), c.n, c.k);
      o.require(brute_spectrum(rs.generator()) == c.formula.lambda, tag + " brute force != formula");
    }
  }
  const auto a = enumerators::mds_spectrum(6, 3, 7).lambda;
  o.require(a[4] == 90 && a[5] == 108 && a[6] == 144, "[6,3]_7 values");
  const auto b = enumerators::mds_spectrum(4, 2, 5).lambda;
  o.require(b[3] == 16 && b[4] == 8, "[4,2]_5 values");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto cases = cli::oracle_equivalence(100, 777, 8, {2, 3, 4, 5, 7, 8, 9});
  o.require(cases.size() == 100, "expected 100 codes");
  std::set<std::uint32_t> fields;
  for (const auto& c : cases) {
    o.require(c.equal, "code " + std::to_string(c.index) + " direct != dual");
    o.require(c.n <= 8, "n > 8");
    fields.insert(c.q);
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(fields.size()) + " distinct fields";

  // Independent spot check: seeded full-rank codes against brute force.
  algebra::SeedStream s(31337);
  int checked = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    std::uint32_t p = 0, m = 0;
    algebra::prime_power(q, &p, &m);
    const auto f = Field::create(p, m);
    for (int t = 0; t < 3; ++t) {
      const std::size_t n = 3 + s.uniform(6);
      const std::size_t k = 1 + s.uniform(q <= 3 ? 5 : 3);
      if (k > n) continue;
      const codes::LinearCode code(algebra::random_matrix(f, k, n, s));
      if (!code.full_rank()) continue;
      const auto brute = brute_spectrum(code.generator());
      o.require(codes::spectrum_direct(code).counts == brute && codes::spectrum_dual(code).counts == brute,
                "brute-force mismatch at q=" + std::to_string(q));
      ++checked;
    }
  }
  o.require(checked > 10, "too few brute-force checks");
  return o;
}

Outcome mean_formula() {
  Outcome o;
  const auto& s = mean_run().summary;
  const ExactRational samples(4000);
  o.require(s.weights.size() == 6, "all weights tracked");
  for (const auto& w : s.weights) {
    // |mean - mu| <= 5 sqrt(var_bound / M), squared to stay exact.
    const ExactRational diff = w.mean - w.mu;
    const bool ok = diff * diff <= ExactRational(25) * w.var_bound / samples;
    o.require(ok, "w=" + std::to_string(w.w) + " mean " + io::approx(w.mean) + " vs mu " + io::approx(w.mu));
  }
  return o;
}

Outcome variance_bound() {
  Outcome o;
  for (const auto& w : mean_run().summary.weights) {
    o.require(w.variance <= w.var_bound, "w=" + std::to_string(w.w) + " variance " + io::approx(w.variance) +
                                             " > " + io::approx(w.var_bound));
  }
  return o;
}

Outcome full_rank_probability() {
  Outcome o;
  // All 256 binary 2 x 4 matrices, rows as 4-bit masks.
  int full = 0;
  for (std::uint32_t r0 = 0; r0 < 16; ++r0)
    for (std::uint32_t r1 = 0; r1 < 16; ++r1) full += binary_two_rows_independent(r0, r1);
  o.require(full == 210, "binary brute force gave " + std::to_string(full));
  // Same count through the library's row reduction.
  const auto f2 = Field::create(2, 1);
  int via_rank = 0;
  for (std::uint32_t bits = 0; bits < 256; ++bits) {
    Matrix g(f2, 2, 4);
    for (std::size_t i = 0; i < 8; ++i) g(i / 4, i % 4) = Elem{(bits >> i) & 1u};
    via_rank += algebra::rank(g) == 2;
  }
  o.require(via_rank == 210, "row reduction gave " + std::to_string(via_rank));
  const auto exact = enumerators::full_rank_prob(4, 2, 2, enumerators::FullRankVariant::Exact);
  o.require(exact == rational(105, 128), "exact product " + exact.get_str());

  const auto target = enumerators::full_rank_prob(4, 2, 5, enumerators::FullRankVariant::Exact);
  o.require(target == rational(77376, 78125), "exact (4,2,5) " + target.get_str());
  const auto mc = ensemble::full_rank_monte_carlo(Field::create(5, 1), 4, 2, 100000, 424242);
  const ExactRational gap = abs(mc.fraction - target);
  o.require(gap <= ExactRational(5, 1000), "Monte Carlo " + io::approx(mc.fraction, 6) + " off by " + io::approx(gap));
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("Monte Carlo ") + io::approx(mc.fraction, 6);

  std::uint64_t checked = 0;
  for (std::size_t n = 4; n <= 12; ++n)
    for (std::uint32_t q = static_cast<std::uint32_t>(n); q <= 64; ++q) {
      if (!algebra::prime_power(q, nullptr, nullptr)) continue;
      for (std::size_t k = 1; k < n; ++k) {
        ++checked;
        const auto p = enumerators::full_rank_prob(n, k, q, enumerators::FullRankVariant::Exact);
        o.require(p >= enumerators::full_rank_lower_bound(n, k, q),
                  "bound fails at " + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(q));
      }
    }
  o.require(checked > 0, "empty sweep");
  return o;
}

Outcome bound_sweep() {
  Outcome o;
  const auto r = enumerators::bounds_sweep(4, 12, 64);
  for (const auto& c : r.categories) o.require(c.failed == 0 && c.checked > 0, std::string(c.name));
  o.require(r.passed(), "sweep reported failures");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(r.total_checked()) + " checks";
  return o;
}

Outcome probe_a1() {
  Outcome o;
  const auto res = ensemble::run_ensemble(config(16, 4, 5, 2, 200, 16425, codes::Strategy::Direct));
  const auto& s = res.summary;
  o.require(s.thresholds.w_low == 2 && !s.thresholds.a1_vacuous, "w_low = " + std::to_string(s.thresholds.w_low));
  o.require(s.fraction_a1 >= ExactRational(99, 100), "fraction_a1 = " + s.fraction_a1.get_str());
  for (const auto& r : res.records) o.require(r.strategy_used == codes::Strategy::Direct, "not direct");
  o.require(s.invariants_hold(), "ensemble invariants");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("fraction_a1 = ") + s.fraction_a1.get_str();
  return o;
}

Outcome probe_a2() {
  Outcome o;
  o.require(enumerators::mds_spectrum(9, 5, 32).lambda[9] == 25214842, "lambda_9");
  const auto res = ensemble::run_ensemble(config(9, 5, 2, 5, 300, 9532, codes::Strategy::Dual));
  const auto& s = res.summary;
  o.require(s.a2_evaluated, "a2 not evaluated");
  o.require(s.fraction_full_rank >= ExactRational(99, 100), "fraction_full_rank = " + s.fraction_full_rank.get_str());
  o.require(s.fraction_a2 >= ExactRational(99, 100), "fraction_a2 = " + s.fraction_a2.get_str());
  o.require(s.theorem.raw == rational(-55, 9), "raw bound " + s.theorem.raw.get_str());
  o.require(s.fraction_q_conditional.has_value() && *s.fraction_q_conditional >= s.theorem.clamped &&
                s.theorem.clamped == 0,
            "Q conditional below bound");
  o.require(s.invariants_hold(), "ensemble invariants");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("Q|full = ") +
              (s.fraction_q_conditional ? s.fraction_q_conditional->get_str() : "n/a") + ", raw bound " +
              s.theorem.raw.get_str();
  return o;
}

Outcome independence() {
  Outcome o;
  for (auto [q, k, n] : std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>>{{2, 2, 2}, {2, 2, 3}, {3, 2, 2}}) {
    const auto r = ensemble::independence_audit(Field::create(q, 1), k, n);
    std::uint64_t pairs = 0;
    for (const auto& e : r.entries) pairs += e.independent_pairs;
    const std::string tag = "(" + std::to_string(q) + "," + std::to_string(k) + "," + std::to_string(n) + ")";
    o.require(r.passed(), tag + " product rule violated");
    o.require(r.entries.size() == n + 1 && pairs > 0, tag + " incomplete audit");
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "wtspec_acceptance_determinism";
  std::filesystem::create_directories(dir);
  std::vector<std::string> outputs;
  for (const char* jobs : {"1", "2", "4", "1"}) {
    const auto path = (dir / (std::string("jobs") + jobs + "_" + std::to_string(outputs.size()) + ".json")).string();
    std::ostringstream out, err;
    const int code = cli::dispatch({"ensemble", "--n", "8", "--k", "4", "--q", "9", "--samples", "400", "--seed",
                                    "1010", "--jobs", jobs, "--summary", path, "--format", "json"},
                                   out, err);
    o.require(code == 0, "exit " + std::to_string(code) + ": " + err.str());
    outputs.push_back(slurp(path));
  }
  std::filesystem::remove_all(dir);
  for (std::size_t i = 1; i < outputs.size(); ++i) o.require(outputs[i] == outputs[0], "summary differs, run " + std::to_string(i));
  o.require(!outputs[0].empty(), "empty summary");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"MDS exactness", mds_exactness},
      {"spectrum oracle equivalence", oracle_equivalence},
      {"mean formula", mean_formula},
      {"variance bound", variance_bound},
      {"full-rank probability", full_rank_probability},
      {"deterministic bound sweep", bound_sweep},
      {"low-weight probe (a1)", probe_a1},
      {"MDS-band probe (a2) and Q", probe_a2},
      {"pairwise independence audit", independence},
      {"determinism across --jobs", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s  %2zu  %-30s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
