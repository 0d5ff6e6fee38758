#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wtspec/codes/code.hpp"
#include "wtspec/codes/spectrum.hpp"
#include "wtspec/enumerators/enumerators.hpp"
#include "wtspec/exact.hpp"

// Monte Carlo over uniformly random k x n generator matrices. Each sample is
// a pure function of (config, index), so samples run in any order on any
// number of threads; aggregation is exact and happens in index order.
namespace wtspec::ensemble {

using codes::MessageWeightCounts;

/// Property (a1): no nonzero message of weight 1..w_low. Vacuously true when
/// thresholds flag a1 as vacuous.
bool check_a1(const MessageWeightCounts& counts, const enumerators::Thresholds& th);

/// Property (a2): lambda_w (q - 3n) <= q N_w <= lambda_w (q + 3n) for every
/// w in [n-k+5, n], inclusive and exact. Vacuously true when n-k+5 > n.
bool check_a2(const MessageWeightCounts& counts, const enumerators::MdsSpectrum& mds);

/// Whether |N_w - mu_w| >= mu_w / n occurred.
bool concentration_check(const MessageWeightCounts& counts, const enumerators::ExpectedSpectrum& expected,
                         std::size_t w);

/// min(1, n^2 (2q+1) / mu_w).
ExactRational chebyshev_bound(const enumerators::ExpectedSpectrum& expected, std::size_t w);

struct EnsembleConfig {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::uint64_t samples = 1;
  std::uint64_t master_seed = 0;
  codes::Strategy strategy = codes::Strategy::Auto;
  std::uint64_t cap = codes::kDefaultEnumerationCap;
  bool check_a1 = true;
  bool check_a2 = true;
  bool check_concentration = true;
  std::vector<std::size_t> tracked_weights;  // empty: every w in 1..n
  unsigned jobs = 1;                         // never affects results
};

struct SampleRecord {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  std::size_t rank = 0;
  bool full_rank = false;
  codes::Strategy strategy_used = codes::Strategy::Direct;
  std::optional<bool> a1;  // empty when not evaluated
  std::optional<bool> a2;  // empty when not evaluated (disabled, or q < n)
  std::optional<std::size_t> dmin;  // empty for the zero code
  MessageWeightCounts counts;
  std::vector<bool> deviation;  // per tracked weight: concentration event
};

struct WeightStats {
  std::size_t w = 0;
  ExactRational mu;
  ExactRational var_bound;
  ExactRational mean;
  ExactRational variance;  // unbiased (divides by M - 1); 0 when M == 1
  bool variance_within_bound = false;
  std::uint64_t deviation_events = 0;
  ExactRational deviation_frequency;
  ExactRational chebyshev;  // min(1, n^2 (2q+1) / mu_w)
  double slack = 0;         // 3 sqrt(ln M / M)
  bool frequency_within_bound = false;
};

struct Invariant {
  std::string name;
  bool holds = true;
};

struct EnsembleSummary {
  EnsembleConfig config;
  std::uint32_t q = 0;
  enumerators::Thresholds thresholds;
  bool a1_evaluated = false;
  bool a2_evaluated = false;

  std::uint64_t full_rank_count = 0;
  std::uint64_t a1_count = 0;
  std::uint64_t a2_count = 0;
  // Samples that are full rank and satisfy every evaluated property; the
  // conditional fraction divides this by full_rank_count.
  std::uint64_t q_count = 0;

  ExactRational fraction_full_rank;
  ExactRational fraction_a1;
  ExactRational fraction_a2;
  ExactRational fraction_q_joint;
  std::optional<ExactRational> fraction_q_conditional;  // empty without full-rank samples

  enumerators::TheoremBound theorem;
  ExactRational full_rank_exact;
  std::vector<WeightStats> weights;
  std::vector<Invariant> invariants;

  bool invariants_hold() const;
};

struct EnsembleResult {
  EnsembleSummary summary;
  std::vector<SampleRecord> records;
};

/// Throws Infeasible when min(q^k, q^(n-k)) exceeds the cap (or the chosen
/// strategy's size does), InvalidArgument for malformed configs.
EnsembleResult run_ensemble(const EnsembleConfig& cfg);

/// One sample, exactly as run_ensemble evaluates it.
SampleRecord run_sample(const EnsembleConfig& cfg, const algebra::FieldPtr& field, std::uint64_t index);

struct FullRankEstimate {
  std::uint64_t samples = 0;
  std::uint64_t full_rank = 0;
  ExactRational fraction;
};

/// Fraction of full-rank k x n matrices among `samples` seeded draws, using
/// the same per-sample seed derivation as run_ensemble.
FullRankEstimate full_rank_monte_carlo(const algebra::FieldPtr& field, std::size_t n, std::size_t k,
                                       std::uint64_t samples, std::uint64_t master_seed, unsigned jobs = 1);

}  // namespace wtspec::ensemble
