#include "wtspec/ensemble/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <string>
#include <thread>

#include "wtspec/algebra/random.hpp"
#include "wtspec/error.hpp"

namespace wtspec::ensemble {
namespace {

using codes::Strategy;

// Everything a sample needs that does not depend on the sample index.
struct Context {
  algebra::FieldPtr field;
  enumerators::Thresholds thresholds;
  enumerators::ExpectedSpectrum expected;
  std::optional<enumerators::MdsSpectrum> mds;
  bool evaluate_a2 = false;
  std::vector<std::size_t> tracked;
};

Context make_context(const EnsembleConfig& cfg, algebra::FieldPtr field) {
  Context ctx;
  const std::uint32_t q = field->q();
  ctx.field = std::move(field);
  ctx.thresholds = enumerators::thresholds(cfg.n, cfg.k, q);
  ctx.expected = enumerators::expected_spectrum(cfg.n, cfg.k, q);
  if (cfg.check_a2) {
    if (q >= cfg.n) {
      ctx.mds = enumerators::mds_spectrum(cfg.n, cfg.k, q);
      ctx.evaluate_a2 = true;
    } else {
      // Without the MDS formula only a vacuous (a2) can be decided.
      ctx.evaluate_a2 = ctx.thresholds.a2_vacuous;
    }
  }
  ctx.tracked = cfg.tracked_weights;
  if (ctx.tracked.empty()) {
    for (std::size_t w = 1; w <= cfg.n; ++w) ctx.tracked.push_back(w);
  }
  for (auto w : ctx.tracked) {
    if (w < 1 || w > cfg.n) throw Error(ErrorCode::InvalidArgument, "tracked weight outside [1, n]");
  }
  return ctx;
}

void validate(const EnsembleConfig& cfg, std::uint32_t q) {
  if (cfg.samples < 1) throw Error(ErrorCode::InvalidArgument, "need at least one sample");
  if (cfg.n < 1 || cfg.k < 1 || cfg.k > cfg.n) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  const bool direct_ok = pow_within(q, cfg.k, cfg.cap);
  const bool dual_ok = pow_within(q, cfg.n - cfg.k, cfg.cap);
  bool feasible = false;
  switch (cfg.strategy) {
    case Strategy::Auto: feasible = direct_ok || dual_ok; break;
    case Strategy::Direct: feasible = direct_ok; break;
    case Strategy::Dual: feasible = dual_ok; break;
  }
  if (!feasible) {
    throw Error(ErrorCode::Infeasible, "enumeration for [" + std::to_string(cfg.n) + "," +
                                           std::to_string(cfg.k) + "]_" + std::to_string(q) +
                                           " with strategy " + std::string(codes::to_string(cfg.strategy)) +
                                           " exceeds cap " + std::to_string(cfg.cap));
  }
}

SampleRecord evaluate(const EnsembleConfig& cfg, const Context& ctx, std::uint64_t index) {
  SampleRecord rec;
  rec.index = index;
  rec.seed = algebra::derive_seed(cfg.master_seed, index);
  algebra::SeedStream stream(rec.seed);
  const codes::LinearCode code(algebra::random_matrix(ctx.field, cfg.k, cfg.n, stream));
  rec.rank = code.rank();
  rec.full_rank = code.full_rank();
  rec.strategy_used = (cfg.strategy == Strategy::Dual && !code.full_rank())
                          ? Strategy::Direct
                          : codes::resolve_strategy(code, cfg.strategy);

  codes::WeightSpectrum spec;
  try {
    spec = codes::spectrum(code, rec.strategy_used, cfg.cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EnumerationTooLarge) throw;
    throw Error(ErrorCode::Infeasible, "sample " + std::to_string(index) + ": " + e.what());
  }
  rec.dmin = spec.min_weight();
  rec.counts = codes::message_counts_from_spectrum(spec, ctx.field->q(), cfg.k, code.rank());

  if (cfg.check_a1) rec.a1 = check_a1(rec.counts, ctx.thresholds);
  if (ctx.evaluate_a2) rec.a2 = ctx.mds ? check_a2(rec.counts, *ctx.mds) : true;
  if (cfg.check_concentration) {
    rec.deviation.reserve(ctx.tracked.size());
    for (auto w : ctx.tracked) rec.deviation.push_back(concentration_check(rec.counts, ctx.expected, w));
  }
  return rec;
}

// Evaluates body(i) for i in [0, count) on up to `jobs` threads. The first
// failure by index is rethrown so errors are as deterministic as results.
void parallel_for(std::uint64_t count, unsigned jobs, const std::function<void(std::uint64_t)>& body) {
  const auto workers = static_cast<unsigned>(std::clamp<std::uint64_t>(jobs, 1, count));
  if (workers == 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
          failed.store(true);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

bool EnsembleSummary::invariants_hold() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const Invariant& i) { return i.holds; });
}

SampleRecord run_sample(const EnsembleConfig& cfg, const algebra::FieldPtr& field, std::uint64_t index) {
  validate(cfg, field->q());
  return evaluate(cfg, make_context(cfg, field), index);
}

EnsembleResult run_ensemble(const EnsembleConfig& cfg) {
  const algebra::FieldPtr field = algebra::Field::create(cfg.p, cfg.m);
  const std::uint32_t q = field->q();
  validate(cfg, q);
  const Context ctx = make_context(cfg, field);

  EnsembleResult result;
  result.records.resize(cfg.samples);
  parallel_for(cfg.samples, cfg.jobs,
               [&](std::uint64_t i) { result.records[i] = evaluate(cfg, ctx, i); });

  EnsembleSummary& s = result.summary;
  s.config = cfg;
  s.q = q;
  s.thresholds = ctx.thresholds;
  s.a1_evaluated = cfg.check_a1;
  s.a2_evaluated = ctx.evaluate_a2;
  s.theorem = enumerators::theorem_bound(cfg.n, q);
  s.full_rank_exact = enumerators::full_rank_prob(cfg.n, cfg.k, q, enumerators::FullRankVariant::Exact);

  const std::size_t tracked = ctx.tracked.size();
  std::vector<BigInt> sum(tracked, BigInt(0)), sum_sq(tracked, BigInt(0));
  std::vector<std::uint64_t> events(tracked, 0);
  bool singleton = true;
  bool message_total = true;
  const BigInt all_messages = big_pow(q, cfg.k);

  for (const auto& rec : result.records) {
    s.full_rank_count += rec.full_rank;
    s.a1_count += rec.a1.value_or(false);
    s.a2_count += rec.a2.value_or(false);
    if (rec.full_rank && rec.a1.value_or(true) && rec.a2.value_or(true)) ++s.q_count;

    if (rec.full_rank && rec.dmin && *rec.dmin > cfg.n - cfg.k + 1) singleton = false;
    BigInt nonzero = 0;
    for (std::size_t w = 1; w <= cfg.n; ++w) nonzero += rec.counts.at(w);
    if (nonzero != all_messages - big_pow(q, cfg.k - rec.rank)) message_total = false;

    for (std::size_t t = 0; t < tracked; ++t) {
      const BigInt& v = rec.counts.at(ctx.tracked[t]);
      sum[t] += v;
      sum_sq[t] += v * v;
      if (cfg.check_concentration && rec.deviation[t]) ++events[t];
    }
  }

  const BigInt samples = BigInt(static_cast<unsigned long>(cfg.samples));
  s.fraction_full_rank = rational(BigInt(static_cast<unsigned long>(s.full_rank_count)), samples);
  s.fraction_a1 = rational(BigInt(static_cast<unsigned long>(s.a1_count)), samples);
  s.fraction_a2 = rational(BigInt(static_cast<unsigned long>(s.a2_count)), samples);
  s.fraction_q_joint = rational(BigInt(static_cast<unsigned long>(s.q_count)), samples);
  if (s.full_rank_count > 0) {
    s.fraction_q_conditional = rational(BigInt(static_cast<unsigned long>(s.q_count)),
                                        BigInt(static_cast<unsigned long>(s.full_rank_count)));
  }

  const double m_real = static_cast<double>(cfg.samples);
  const double slack = cfg.samples > 1 ? 3.0 * std::sqrt(std::log(m_real) / m_real) : 0.0;
  bool variance_ok = true;
  bool frequency_ok = true;
  for (std::size_t t = 0; t < tracked; ++t) {
    WeightStats ws;
    ws.w = ctx.tracked[t];
    ws.mu = ctx.expected.mu[ws.w];
    ws.var_bound = ctx.expected.var_bound[ws.w];
    ws.mean = rational(sum[t], samples);
    if (cfg.samples > 1) {
      const ExactRational centered = ExactRational(sum_sq[t]) - ExactRational(sum[t] * sum[t]) / ExactRational(samples);
      ws.variance = centered / ExactRational(samples - 1);
    } else {
      ws.variance = 0;
    }
    ws.variance_within_bound = ws.variance <= ws.var_bound;
    ws.deviation_events = events[t];
    ws.deviation_frequency = rational(BigInt(static_cast<unsigned long>(events[t])), samples);
    ws.chebyshev = chebyshev_bound(ctx.expected, ws.w);
    ws.slack = slack;
    ws.frequency_within_bound = ws.deviation_frequency <= ws.chebyshev + ExactRational(slack);
    variance_ok = variance_ok && ws.variance_within_bound;
    frequency_ok = frequency_ok && ws.frequency_within_bound;
    s.weights.push_back(std::move(ws));
  }

  s.invariants.push_back({"singleton_full_rank", singleton});
  s.invariants.push_back({"message_total", message_total});
  s.invariants.push_back({"variance_bound", variance_ok});
  if (cfg.check_concentration) s.invariants.push_back({"chebyshev_frequency", frequency_ok});
  s.invariants.push_back({"q_conditional_vs_theorem",
                          !s.fraction_q_conditional || *s.fraction_q_conditional >= s.theorem.clamped});
  return result;
}

FullRankEstimate full_rank_monte_carlo(const algebra::FieldPtr& field, std::size_t n, std::size_t k,
                                       std::uint64_t samples, std::uint64_t master_seed, unsigned jobs) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "need at least one sample");
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  std::vector<unsigned char> hit(samples, 0);
  parallel_for(samples, jobs, [&](std::uint64_t i) {
    algebra::SeedStream stream(algebra::derive_seed(master_seed, i));
    hit[i] = algebra::rank(algebra::random_matrix(field, k, n, stream)) == k;
  });
  FullRankEstimate est;
  est.samples = samples;
  for (auto h : hit) est.full_rank += h;
  est.fraction = rational(BigInt(static_cast<unsigned long>(est.full_rank)),
                          BigInt(static_cast<unsigned long>(samples)));
  return est;
}

}  // namespace wtspec::ensemble
