#include "wtspec/io/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace wtspec::io {
namespace {

Json big_array(const std::vector<BigInt>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(v.get_str());
  return a;
}

Json rational_array(const std::vector<ExactRational>& values, std::size_t from) {
  Json a = Json::array();
  for (std::size_t i = from; i < values.size(); ++i) a.push_back(values[i].get_str());
  return a;
}

std::string flag(const std::optional<bool>& b) {
  if (!b) return "NA";
  return *b ? "1" : "0";
}

}  // namespace

std::string approx(const ExactRational& r, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, r.get_d());
  return buf;
}

Json to_json(const codes::WeightSpectrum& spec) {
  Json j;
  j["n"] = spec.n();
  j["total"] = spec.total().get_str();
  j["counts"] = big_array(spec.counts);
  return j;
}

Json to_json(const enumerators::MdsSpectrum& mds) {
  Json j;
  j["n"] = mds.n;
  j["k"] = mds.k;
  j["q"] = mds.q;
  j["d"] = mds.d;
  j["lambda"] = big_array(mds.lambda);
  return j;
}

Json to_json(const enumerators::ExpectedSpectrum& expected) {
  Json j;
  j["n"] = expected.n;
  j["k"] = expected.k;
  j["q"] = expected.q;
  j["first_weight"] = 1;
  j["mu"] = rational_array(expected.mu, 1);
  j["var_bound"] = rational_array(expected.var_bound, 1);
  return j;
}

Json to_json(const enumerators::Thresholds& th) {
  Json j;
  j["w_low_real"] = th.w_low_real;
  j["w_low"] = th.w_low;
  j["a1_vacuous"] = th.a1_vacuous;
  j["w_up"] = th.w_up;
  j["a2_vacuous"] = th.a2_vacuous;
  j["a2_band"] = th.a2_band.get_str();
  return j;
}

Json to_json(const enumerators::BoundsSweepReport& report) {
  Json j;
  j["suite"] = "bounds";
  j["n_min"] = report.n_min;
  j["n_max"] = report.n_max;
  j["q_max"] = report.q_max;
  j["passed"] = report.passed();
  j["checked"] = report.total_checked();
  Json cats = Json::array();
  for (const auto& c : report.categories) {
    cats.push_back({{"check", std::string(c.name)}, {"checked", c.checked}, {"failed", c.failed}});
  }
  j["categories"] = cats;
  Json fails = Json::array();
  for (const auto& f : report.failures) {
    fails.push_back({{"check", std::string(f.check)}, {"n", f.n}, {"k", f.k}, {"q", f.q}, {"w", f.w}});
  }
  j["failures"] = fails;
  return j;
}

Json to_json(const ensemble::IndependenceReport& report) {
  Json j;
  j["suite"] = "independence";
  j["q"] = report.q;
  j["k"] = report.k;
  j["n"] = report.n;
  j["matrices"] = report.matrices;
  j["passed"] = report.passed();
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"w", e.w},
                       {"independent_pairs", e.independent_pairs},
                       {"independent_failures", e.independent_failures},
                       {"dependent_pairs", e.dependent_pairs},
                       {"dependent_unequal", e.dependent_unequal}});
  }
  j["entries"] = entries;
  return j;
}

Json to_json(const ensemble::EnsembleSummary& s) {
  const auto& cfg = s.config;
  Json j;
  j["schema"] = kSummarySchema;

  Json c;
  c["n"] = cfg.n;
  c["k"] = cfg.k;
  c["p"] = cfg.p;
  c["m"] = cfg.m;
  c["q"] = s.q;
  c["samples"] = std::to_string(cfg.samples);
  c["seed"] = std::to_string(cfg.master_seed);
  c["strategy"] = std::string(codes::to_string(cfg.strategy));
  c["cap"] = std::to_string(cfg.cap);
  c["checks"] = {{"a1", cfg.check_a1}, {"a2", cfg.check_a2}, {"concentration", cfg.check_concentration}};
  Json tracked = Json::array();
  for (const auto& w : s.weights) tracked.push_back(w.w);
  c["tracked_weights"] = tracked;
  j["config"] = c;

  j["thresholds"] = to_json(s.thresholds);
  j["a1_evaluated"] = s.a1_evaluated;
  j["a2_evaluated"] = s.a2_evaluated;

  j["counts"] = {{"samples", std::to_string(cfg.samples)},
                 {"full_rank", std::to_string(s.full_rank_count)},
                 {"a1", std::to_string(s.a1_count)},
                 {"a2", std::to_string(s.a2_count)},
                 {"q", std::to_string(s.q_count)}};

  Json fr;
  fr["full_rank"] = s.fraction_full_rank.get_str();
  fr["a1"] = s.fraction_a1.get_str();
  fr["a2"] = s.fraction_a2.get_str();
  fr["q_joint"] = s.fraction_q_joint.get_str();
  fr["q_conditional"] = s.fraction_q_conditional ? Json(s.fraction_q_conditional->get_str()) : Json(nullptr);
  j["fractions"] = fr;

  j["full_rank_exact"] = s.full_rank_exact.get_str();
  j["theorem_bound"] = {{"raw", s.theorem.raw.get_str()}, {"clamped", s.theorem.clamped.get_str()}};

  Json weights = Json::array();
  for (const auto& w : s.weights) {
    Json e;
    e["w"] = w.w;
    e["mu"] = w.mu.get_str();
    e["var_bound"] = w.var_bound.get_str();
    e["mean"] = w.mean.get_str();
    e["variance"] = w.variance.get_str();
    e["variance_within_bound"] = w.variance_within_bound;
    if (cfg.check_concentration) {
      e["deviation_events"] = std::to_string(w.deviation_events);
      e["deviation_frequency"] = w.deviation_frequency.get_str();
      e["chebyshev_bound"] = w.chebyshev.get_str();
      e["slack"] = w.slack;
      e["frequency_within_bound"] = w.frequency_within_bound;
    }
    weights.push_back(e);
  }
  j["weights"] = weights;

  Json inv;
  for (const auto& i : s.invariants) inv[i.name] = i.holds;
  j["invariants"] = inv;
  return j;
}

void write_spectrum_csv(std::ostream& out, const codes::WeightSpectrum& spec) {
  out << "w,count\n";
  for (std::size_t w = 0; w < spec.counts.size(); ++w) out << w << ',' << spec.counts[w].get_str() << '\n';
}

void write_records_csv(std::ostream& out, const std::vector<ensemble::SampleRecord>& records, std::size_t n) {
  out << "idx,seed,rank,full_rank,a1,a2,dmin";
  for (std::size_t w = 1; w <= n; ++w) out << ",N_" << w;
  out << '\n';
  for (const auto& r : records) {
    out << r.index << ',' << r.seed << ',' << r.rank << ',' << (r.full_rank ? 1 : 0) << ',' << flag(r.a1) << ','
        << flag(r.a2) << ',';
    if (r.dmin) out << *r.dmin;
    else out << "NA";
    for (std::size_t w = 1; w <= n; ++w) out << ',' << r.counts.at(w).get_str();
    out << '\n';
  }
}

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());

  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string& cell = c < cells.size() ? cells[c] : std::string();
      if (c) out << "  ";
      out << std::string(width[c] - cell.size(), ' ') << cell;
    }
    out << '\n';
  };
  emit(header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& row : rows) emit(row);
}

}  // namespace wtspec::io
