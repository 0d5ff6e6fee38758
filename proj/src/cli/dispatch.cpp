#include "wtspec/cli/dispatch.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wtspec/algebra/field.hpp"
#include "wtspec/cli/suites.hpp"
#include "wtspec/codes/reed_solomon.hpp"
#include "wtspec/codes/spectrum.hpp"
#include "wtspec/ensemble/ensemble.hpp"
#include "wtspec/ensemble/independence.hpp"
#include "wtspec/enumerators/enumerators.hpp"
#include "wtspec/error.hpp"
#include "wtspec/io/matrix_text.hpp"
#include "wtspec/io/serialize.hpp"

namespace wtspec::cli {
namespace {

using io::Json;

struct FieldArgs {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t m = 1;

  void attach(CLI::App* app, bool required = true) {
    auto* qo = app->add_option("--q", q, "Field order (a prime power)");
    auto* po = app->add_option("--p", p, "Field characteristic");
    app->add_option("--m", m, "Extension degree (with --p)")->needs(po);
    qo->excludes(po);
    if (required) {
      app->callback([qo, po] {
        if (qo->count() == 0 && po->count() == 0) throw CLI::RequiredError("--q or --p");
      });
    }
  }

  algebra::FieldPtr field() const {
    if (q != 0) {
      std::uint32_t fp = 0, fm = 0;
      if (!algebra::prime_power(q, &fp, &fm)) {
        throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
      }
      return algebra::Field::create(fp, fm);
    }
    return algebra::Field::create(p, m);
  }
};

enum class Format { Table, Json, Csv };

struct OutputArgs {
  std::string format = "table";
  std::string path;

  void attach(CLI::App* app, bool csv = true) {
    std::vector<std::string> choices{"table", "json"};
    if (csv) choices.push_back("csv");
    app->add_option("--format", format, "Output format")->check(CLI::IsMember(choices));
    app->add_option("--out", path, "Write results to this file instead of standard output");
  }

  Format kind() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Table;
  }
};

// Writes `body` to the file, or to `out` when path is empty.
void emit(const std::string& path, std::ostream& out, const std::string& body) {
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path);
  f << body;
  if (!f) throw Error(ErrorCode::IoError, "write failed for " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream s;
  io::write_table(s, header, rows);
  return s.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- spectrum

int run_spectrum(const std::string& gen, const std::string& strategy_name, std::uint64_t cap,
                 const OutputArgs& o, std::ostream& out) {
  const codes::LinearCode code(io::read_matrix_file(gen));
  const codes::Strategy strategy = codes::parse_strategy(strategy_name);
  const codes::WeightSpectrum spec = codes::spectrum(code, strategy, cap);
  const auto dmin = spec.min_weight();
  const bool mds = code.full_rank() && dmin && *dmin == code.n() - code.k() + 1;

  switch (o.kind()) {
    case Format::Csv: {
      std::ostringstream s;
      io::write_spectrum_csv(s, spec);
      emit(o.path, out, s.str());
      break;
    }
    case Format::Json: {
      Json j;
      j["n"] = code.n();
      j["k"] = code.k();
      j["q"] = code.field().q();
      j["rank"] = code.rank();
      j["strategy"] = std::string(codes::to_string(codes::resolve_strategy(code, strategy)));
      j["dmin"] = dmin ? Json(*dmin) : Json(nullptr);
      j["mds"] = mds;
      j["spectrum"] = io::to_json(spec);
      emit(o.path, out, dump(j));
      break;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t w = 0; w < spec.counts.size(); ++w) rows.push_back({std::to_string(w), spec.counts[w].get_str()});
      std::ostringstream s;
      s << "[" << code.n() << "," << code.k() << "]_" << code.field().q() << "  rank " << code.rank() << "  dmin "
        << (dmin ? std::to_string(*dmin) : "-") << "  mds " << yes_no(mds) << "\n";
      s << table({"w", "A_w"}, rows);
      emit(o.path, out, s.str());
      break;
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------------- mds

int run_mds(std::size_t n, std::size_t k, const FieldArgs& fa, bool bounds, const OutputArgs& o, std::ostream& out) {
  const std::uint32_t q = fa.field()->q();
  const auto mds = enumerators::mds_spectrum(n, k, q);
  switch (o.kind()) {
    case Format::Csv: {
      std::ostringstream s;
      s << "w,lambda\n";
      for (std::size_t w = 0; w <= n; ++w) s << w << ',' << mds.lambda[w].get_str() << '\n';
      emit(o.path, out, s.str());
      break;
    }
    case Format::Json: {
      Json j = io::to_json(mds);
      if (bounds) {
        Json rows = Json::array();
        for (std::size_t w = mds.d; w <= n; ++w) {
          const auto rb = enumerators::ratio_bounds(n, k, q, w);
          const auto th = enumerators::theta_expansion(n, k, q, w);
          rows.push_back({{"w", w},
                          {"ratio", rb.ratio.get_str()},
                          {"lower", rb.lower.get_str()},
                          {"upper", rb.upper ? Json(rb.upper->get_str()) : Json(nullptr)},
                          {"ratio_holds", rb.holds},
                          {"theta", th.theta.get_str()},
                          {"theta_checks", th.all()}});
        }
        j["bounds"] = rows;
      }
      emit(o.path, out, dump(j));
      break;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t w = 0; w <= n; ++w) {
        std::vector<std::string> row{std::to_string(w), mds.lambda[w].get_str()};
        if (bounds) {
          if (w >= mds.d) {
            const auto rb = enumerators::ratio_bounds(n, k, q, w);
            row.push_back(io::approx(rb.ratio));
            row.push_back(io::approx(rb.lower));
            row.push_back(rb.upper ? io::approx(*rb.upper) : "inf");
            row.push_back(yes_no(rb.holds && enumerators::theta_expansion(n, k, q, w).all()));
          } else {
            row.insert(row.end(), {"", "", "", ""});
          }
        }
        rows.push_back(row);
      }
      std::vector<std::string> header{"w", "lambda_w"};
      if (bounds) header.insert(header.end(), {"lambda/mu", "lower", "upper", "holds"});
      std::ostringstream s;
      s << "MDS [" << n << "," << k << "]_" << q << "  D = " << mds.d << "\n" << table(header, rows);
      emit(o.path, out, s.str());
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- expected

int run_expected(std::size_t n, std::size_t k, const FieldArgs& fa, const OutputArgs& o, std::ostream& out) {
  const std::uint32_t q = fa.field()->q();
  const auto ex = enumerators::expected_spectrum(n, k, q);
  const auto th = enumerators::thresholds(n, k, q);
  const auto tb = enumerators::theorem_bound(n, q);
  switch (o.kind()) {
    case Format::Csv: {
      std::ostringstream s;
      s << "w,mu,var_bound\n";
      for (std::size_t w = 1; w <= n; ++w) s << w << ',' << ex.mu[w].get_str() << ',' << ex.var_bound[w].get_str() << '\n';
      emit(o.path, out, s.str());
      break;
    }
    case Format::Json: {
      Json j = io::to_json(ex);
      j["thresholds"] = io::to_json(th);
      j["theorem_bound"] = {{"raw", tb.raw.get_str()}, {"clamped", tb.clamped.get_str()}};
      if (n >= 4) {
        const auto r = enumerators::regime_check(n, k, q);
        j["regime"] = {{"lower", r.lower},           {"upper", r.upper},         {"rate", r.rate},
                       {"interval_empty", r.interval_empty}, {"in_regime", r.in_regime}, {"q_over_n", r.q_over_n}};
      }
      emit(o.path, out, dump(j));
      break;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t w = 1; w <= n; ++w) {
        rows.push_back({std::to_string(w), ex.mu[w].get_str(), io::approx(ex.mu[w]), io::approx(ex.var_bound[w])});
      }
      std::ostringstream s;
      s << "random [" << n << "," << k << "]_" << q << " generator\n"
        << table({"w", "mu_w", "approx", "var_bound"}, rows);
      s << "w_low = " << th.w_low << " (" << th.w_low_real << ")" << (th.a1_vacuous ? " a1 vacuous" : "")
        << "  w_up = " << th.w_up << (th.a2_vacuous ? " a2 vacuous" : "") << "\n";
      s << "1 - 18q/n^2 = " << tb.raw.get_str() << " (clamped " << tb.clamped.get_str() << ")\n";
      emit(o.path, out, s.str());
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------- rs

int run_rs(std::size_t n, std::size_t k, const FieldArgs& fa, const std::string& path, std::ostream& out) {
  const auto code = codes::reed_solomon(fa.field(), n, k);
  std::ostringstream s;
  io::write_matrix_text(s, code.generator());
  emit(path, out, s.str());
  return kExitOk;
}

// ---------------------------------------------------------------- fullrank

int run_fullrank(std::size_t n, std::size_t k, const FieldArgs& fa, const std::string& variant_name,
                 std::uint64_t montecarlo, std::optional<std::uint64_t> seed, unsigned jobs, const OutputArgs& o,
                 std::ostream& out) {
  const auto field = fa.field();
  const std::uint32_t q = field->q();
  const auto variant = enumerators::parse_full_rank_variant(variant_name);
  const auto prob = enumerators::full_rank_prob(n, k, q, variant);
  const auto lower = enumerators::full_rank_lower_bound(n, k, q);
  std::optional<ensemble::FullRankEstimate> est;
  if (montecarlo > 0) est = ensemble::full_rank_monte_carlo(field, n, k, montecarlo, *seed, jobs);

  if (o.kind() == Format::Json) {
    Json j;
    j["n"] = n;
    j["k"] = k;
    j["q"] = q;
    j["variant"] = std::string(enumerators::to_string(variant));
    j["probability"] = prob.get_str();
    j["lower_bound"] = lower.get_str();
    j["bound_holds"] = prob >= lower;
    if (est) {
      j["montecarlo"] = {{"samples", std::to_string(est->samples)},
                         {"seed", std::to_string(*seed)},
                         {"full_rank", std::to_string(est->full_rank)},
                         {"fraction", est->fraction.get_str()}};
    }
    emit(o.path, out, dump(j));
    return kExitOk;
  }
  std::vector<std::vector<std::string>> rows{
      {std::string(enumerators::to_string(variant)), prob.get_str(), io::approx(prob, 8)},
      {"1 - 2/q^(n-k)", lower.get_str(), io::approx(lower, 8)},
  };
  if (est) rows.push_back({"monte carlo", est->fraction.get_str(), io::approx(est->fraction, 8)});
  emit(o.path, out, table({"quantity", "exact", "approx"}, rows));
  return kExitOk;
}

// ---------------------------------------------------------------- ensemble

struct EnsembleArgs {
  ensemble::EnsembleConfig cfg;
  FieldArgs field;
  std::string strategy = "auto";
  std::string summary_path;
  std::string records_path;
  std::vector<std::size_t> weights;
  bool no_a1 = false, no_a2 = false, no_concentration = false;
  bool assert_invariants = false;
  bool stamp = false;
  std::string format = "table";
};

int run_ensemble_cmd(EnsembleArgs& a, std::ostream& out) {
  const auto field = a.field.field();
  a.cfg.p = field->p();
  a.cfg.m = field->m();
  a.cfg.strategy = codes::parse_strategy(a.strategy);
  a.cfg.tracked_weights = a.weights;
  a.cfg.check_a1 = !a.no_a1;
  a.cfg.check_a2 = !a.no_a2;
  a.cfg.check_concentration = !a.no_concentration;

  const auto result = ensemble::run_ensemble(a.cfg);
  const auto& s = result.summary;
  Json j = io::to_json(s);
  if (a.stamp) {
    j["stamp"] = std::to_string(std::chrono::duration_cast<std::chrono::seconds>(
                                    std::chrono::system_clock::now().time_since_epoch())
                                    .count());
  }
  if (!a.summary_path.empty()) emit(a.summary_path, out, dump(j));
  if (!a.records_path.empty()) {
    std::ostringstream csv;
    io::write_records_csv(csv, result.records, a.cfg.n);
    emit(a.records_path, out, csv.str());
  }

  if (a.format == "json") {
    if (a.summary_path.empty()) out << dump(j);
  } else {
    std::vector<std::vector<std::string>> rows{
        {"full rank", s.fraction_full_rank.get_str(), io::approx(s.fraction_full_rank)},
        {"a1", s.a1_evaluated ? s.fraction_a1.get_str() : "n/a", s.a1_evaluated ? io::approx(s.fraction_a1) : ""},
        {"a2", s.a2_evaluated ? s.fraction_a2.get_str() : "n/a", s.a2_evaluated ? io::approx(s.fraction_a2) : ""},
        {"Q | full rank", s.fraction_q_conditional ? s.fraction_q_conditional->get_str() : "n/a",
         s.fraction_q_conditional ? io::approx(*s.fraction_q_conditional) : ""},
        {"Q joint", s.fraction_q_joint.get_str(), io::approx(s.fraction_q_joint)},
        {"1 - 18q/n^2", s.theorem.raw.get_str(), io::approx(s.theorem.raw)},
    };
    out << "ensemble [" << a.cfg.n << "," << a.cfg.k << "]_" << s.q << "  M = " << a.cfg.samples << "  seed "
        << a.cfg.master_seed << "\n"
        << table({"event", "fraction", "approx"}, rows);
    std::vector<std::vector<std::string>> wr;
    for (const auto& w : s.weights) {
      wr.push_back({std::to_string(w.w), io::approx(w.mu), io::approx(w.mean), io::approx(w.variance),
                    io::approx(w.var_bound), yes_no(w.variance_within_bound)});
    }
    out << table({"w", "mu_w", "mean N_w", "var N_w", "(2q+1)mu_w", "var ok"}, wr);
    for (const auto& inv : s.invariants) out << "invariant " << inv.name << ": " << (inv.holds ? "ok" : "VIOLATED") << "\n";
  }
  if (a.assert_invariants && !s.invariants_hold()) return kExitAssert;
  return kExitOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string suite = "bounds";
  std::size_t nmin = 4, nmax = 12;
  std::uint32_t qmax = 64;
  std::uint64_t count = 100;
  std::optional<std::uint64_t> seed;
  std::string format = "table";
};

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const bool json = a.format == "json";
  bool passed = true;
  Json report = Json::array();
  std::ostringstream text;

  auto want = [&](const char* name) { return a.suite == name || a.suite == "all"; };

  if (want("bounds")) {
    const auto r = enumerators::bounds_sweep(a.nmin, a.nmax, a.qmax);
    passed = passed && r.passed();
    report.push_back(io::to_json(r));
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : r.categories) rows.push_back({std::string(c.name), std::to_string(c.checked), std::to_string(c.failed)});
    text << "bounds sweep n in [" << r.n_min << "," << r.n_max << "], q <= " << r.q_max << "\n"
         << table({"check", "checked", "failed"}, rows);
  }
  if (want("mds")) {
    const auto cases = mds_exactness({{4, 2, 5}, {6, 3, 7}, {8, 4, 9}, {10, 5, 11}});
    Json j;
    j["suite"] = "mds";
    Json arr = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : cases) {
      passed = passed && c.equal && c.is_mds;
      arr.push_back({{"n", c.n}, {"k", c.k}, {"q", c.q}, {"equal", c.equal}, {"is_mds", c.is_mds}});
      rows.push_back({"[" + std::to_string(c.n) + "," + std::to_string(c.k) + "]_" + std::to_string(c.q),
                      yes_no(c.is_mds), yes_no(c.equal)});
    }
    j["cases"] = arr;
    report.push_back(j);
    text << "Reed-Solomon vs closed-form MDS spectrum\n" << table({"code", "mds", "equal"}, rows);
  }
  if (want("oracle")) {
    if (!a.seed) {
      err << "verify --suite oracle requires --seed\n";
      return kExitUsage;
    }
    const auto cases = oracle_equivalence(a.count, *a.seed, 8, {2, 3, 4, 5, 7, 8, 9});
    std::uint64_t mismatches = 0;
    for (const auto& c : cases) mismatches += !c.equal;
    passed = passed && mismatches == 0;
    report.push_back({{"suite", "oracle"}, {"codes", cases.size()}, {"mismatches", mismatches}});
    text << "direct vs dual spectra: " << cases.size() << " codes, " << mismatches << " mismatches\n";
  }
  if (want("independence")) {
    std::vector<std::vector<std::string>> rows;
    for (auto [q, k, n] : std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>>{{2, 2, 2}, {2, 2, 3}, {3, 2, 2}}) {
      std::uint32_t p = 0, m = 0;
      algebra::prime_power(q, &p, &m);
      const auto r = ensemble::independence_audit(algebra::Field::create(p, m), k, n);
      passed = passed && r.passed();
      report.push_back(io::to_json(r));
      std::uint64_t pairs = 0, failures = 0, dep = 0, dep_unequal = 0;
      for (const auto& e : r.entries) {
        pairs += e.independent_pairs;
        failures += e.independent_failures;
        dep += e.dependent_pairs;
        dep_unequal += e.dependent_unequal;
      }
      rows.push_back({std::to_string(q), std::to_string(k), std::to_string(n), std::to_string(pairs),
                      std::to_string(failures), std::to_string(dep), std::to_string(dep_unequal)});
    }
    text << "pairwise independence (exhaustive)\n"
         << table({"q", "k", "n", "pairs", "failures", "dependent", "dep. unequal"}, rows);
  }
  if (report.empty()) {
    err << "unknown suite '" << a.suite << "'\n";
    return kExitUsage;
  }
  if (json) out << dump(Json{{"passed", passed}, {"suites", report}});
  else out << text.str() << (passed ? "PASS\n" : "FAIL\n");
  return passed ? kExitOk : kExitAssert;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight-spectrum workbench for linear codes over finite fields", "wtspec"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Exact weight spectrum of a generator matrix file");
  std::string gen;
  std::string spectrum_strategy = "auto";
  std::uint64_t cap = codes::kDefaultEnumerationCap;
  OutputArgs spectrum_out;
  spectrum_cmd->add_option("--gen", gen, "Generator matrix in the text format")->required()->check(CLI::ExistingFile);
  spectrum_cmd->add_option("--strategy", spectrum_strategy, "auto, direct or dual")
      ->check(CLI::IsMember({"auto", "direct", "dual"}));
  spectrum_cmd->add_option("--cap", cap, "Maximum number of enumerated words");
  spectrum_out.attach(spectrum_cmd);

  // mds
  auto* mds_cmd = app.add_subcommand("mds", "Closed-form MDS weight spectrum lambda_w");
  std::size_t mds_n = 0, mds_k = 0;
  FieldArgs mds_field;
  bool mds_bounds = false;
  OutputArgs mds_out;
  mds_cmd->add_option("--n", mds_n, "Code length")->required();
  mds_cmd->add_option("--k", mds_k, "Code dimension")->required();
  mds_field.attach(mds_cmd);
  mds_cmd->add_flag("--bounds", mds_bounds, "Also evaluate the lambda/mu ratio bounds and theta checks");
  mds_out.attach(mds_cmd);

  // expected
  auto* expected_cmd = app.add_subcommand("expected", "Expected spectrum mu_w of a random generator matrix");
  std::size_t ex_n = 0, ex_k = 0;
  FieldArgs ex_field;
  OutputArgs ex_out;
  expected_cmd->add_option("--n", ex_n, "Code length")->required();
  expected_cmd->add_option("--k", ex_k, "Code dimension")->required();
  ex_field.attach(expected_cmd);
  ex_out.attach(expected_cmd);

  // rs
  auto* rs_cmd = app.add_subcommand("rs", "Reed-Solomon generator matrix in the text format");
  std::size_t rs_n = 0, rs_k = 0;
  FieldArgs rs_field;
  std::string rs_path;
  rs_cmd->add_option("--n", rs_n, "Code length (<= q)")->required();
  rs_cmd->add_option("--k", rs_k, "Code dimension")->required();
  rs_field.attach(rs_cmd);
  rs_cmd->add_option("--out", rs_path, "Output file (default: standard output)");

  // fullrank
  auto* fr_cmd = app.add_subcommand("fullrank", "Probability that a random k x n matrix has full rank");
  std::size_t fr_n = 0, fr_k = 0;
  FieldArgs fr_field;
  std::string fr_variant = "exact";
  std::uint64_t fr_mc = 0;
  std::optional<std::uint64_t> fr_seed;
  unsigned fr_jobs = 1;
  OutputArgs fr_out;
  fr_cmd->add_option("--n", fr_n, "Columns")->required();
  fr_cmd->add_option("--k", fr_k, "Rows")->required();
  fr_field.attach(fr_cmd);
  fr_cmd->add_option("--variant", fr_variant, "exact, or truncated (drops the j = 0 factor)")
      ->check(CLI::IsMember({"exact", "truncated"}));
  auto* mc_opt = fr_cmd->add_option("--montecarlo", fr_mc, "Number of Monte Carlo samples");
  auto* fr_seed_opt = fr_cmd->add_option("--seed", fr_seed, "Master seed (required with --montecarlo)");
  mc_opt->needs(fr_seed_opt);
  fr_cmd->add_option("--jobs", fr_jobs, "Worker threads")->check(CLI::PositiveNumber);
  fr_out.attach(fr_cmd, false);

  // ensemble
  auto* en_cmd = app.add_subcommand("ensemble", "Monte Carlo over random generator matrices");
  EnsembleArgs en;
  en_cmd->add_option("--n", en.cfg.n, "Code length")->required();
  en_cmd->add_option("--k", en.cfg.k, "Code dimension")->required();
  en.field.attach(en_cmd);
  en_cmd->add_option("--samples", en.cfg.samples, "Number of sampled matrices M")->required()->check(CLI::PositiveNumber);
  en_cmd->add_option("--seed", en.cfg.master_seed, "Master seed")->required();
  en_cmd->add_option("--strategy", en.strategy, "auto, direct or dual")->check(CLI::IsMember({"auto", "direct", "dual"}));
  en_cmd->add_option("--cap", en.cfg.cap, "Maximum enumerated words per sample");
  en_cmd->add_option("--jobs", en.cfg.jobs, "Worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
  en_cmd->add_option("--summary", en.summary_path, "Summary JSON output path");
  en_cmd->add_option("--records", en.records_path, "Per-sample CSV output path");
  en_cmd->add_option("--weights", en.weights, "Tracked weights (default: all)")->delimiter(',');
  en_cmd->add_flag("--no-a1", en.no_a1, "Skip the low-weight property");
  en_cmd->add_flag("--no-a2", en.no_a2, "Skip the MDS-band property");
  en_cmd->add_flag("--no-concentration", en.no_concentration, "Skip the deviation events");
  en_cmd->add_flag("--assert", en.assert_invariants, "Exit 3 when an invariant is violated");
  en_cmd->add_flag("--stamp", en.stamp, "Add a timestamp to the summary JSON");
  en_cmd->add_option("--format", en.format, "Standard output format")->check(CLI::IsMember({"table", "json"}));

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
  VerifyArgs ver;
  ver_cmd->add_option("--suite", ver.suite, "bounds, mds, oracle, independence or all")
      ->check(CLI::IsMember({"bounds", "mds", "oracle", "independence", "all"}));
  ver_cmd->add_option("--nmin", ver.nmin, "Smallest length in the bounds sweep");
  ver_cmd->add_option("--nmax", ver.nmax, "Largest length in the bounds sweep");
  ver_cmd->add_option("--qmax", ver.qmax, "Largest field order in the bounds sweep");
  ver_cmd->add_option("--count", ver.count, "Random codes in the oracle suite");
  ver_cmd->add_option("--seed", ver.seed, "Seed for the oracle suite");
  ver_cmd->add_option("--format", ver.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  std::vector<const char*> argv{"wtspec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*spectrum_cmd) return run_spectrum(gen, spectrum_strategy, cap, spectrum_out, out);
    if (*mds_cmd) return run_mds(mds_n, mds_k, mds_field, mds_bounds, mds_out, out);
    if (*expected_cmd) return run_expected(ex_n, ex_k, ex_field, ex_out, out);
    if (*rs_cmd) return run_rs(rs_n, rs_k, rs_field, rs_path, out);
    if (*fr_cmd) return run_fullrank(fr_n, fr_k, fr_field, fr_variant, fr_mc, fr_seed, fr_jobs, fr_out, out);
    if (*en_cmd) return run_ensemble_cmd(en, out);
    if (*ver_cmd) return run_verify(ver, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace wtspec::cli
