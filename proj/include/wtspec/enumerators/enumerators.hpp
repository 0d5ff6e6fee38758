#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wtspec/exact.hpp"

// Closed-form weight-spectrum quantities for [n,k]_q codes. Everything is
// exact except thresholds(), regime_check() and the Stirling comparison.
namespace wtspec::enumerators {

/// Weight spectrum of any [n,k]_q MDS code, valid for n <= q.
struct MdsSpectrum {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint32_t q = 0;
  std::size_t d = 0;            // n - k + 1
  std::vector<BigInt> lambda;   // lambda[0] = 1, lambda[w] = 0 for 1 <= w <= n-k
};

/// Expected message counts mu_w = C(n,w) (q-1)^w (q^k - 1) / q^n of a uniform
/// random k x n generator matrix, and the variance bound (2q+1) mu_w.
struct ExpectedSpectrum {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint32_t q = 0;
  std::vector<ExactRational> mu;         // index w; mu[0] unused (0)
  std::vector<ExactRational> var_bound;  // index w; var_bound[0] unused (0)
};

/// Throws QSmallerThanN when q < n.
MdsSpectrum mds_spectrum(std::size_t n, std::size_t k, std::uint32_t q);
ExpectedSpectrum expected_spectrum(std::size_t n, std::size_t k, std::uint32_t q);

/// C(n,w) q^w / q^(n-k): the common normaliser of lambda_w and mu_w.
ExactRational spectrum_normalizer(std::size_t n, std::size_t k, std::uint32_t q, std::size_t w);

struct RatioBounds {
  ExactRational lower;                 // (1 - 1/q)(1 - (w-1)/q)
  std::optional<ExactRational> upper;  // 1 / (1 - w/q); unbounded when w == q
  ExactRational ratio;                 // lambda_w / mu_w
  bool holds = false;
};

/// lambda_w / mu_w against its two-sided bound. Needs q >= n and
/// n-k+1 <= w <= n (QSmallerThanN / WeightOutOfRange).
RatioBounds ratio_bounds(std::size_t n, std::size_t k, std::uint32_t q, std::size_t w);

/// theta(w) = sum_{j=0}^{w-D} (-1)^j C(w-1,j) q^-j with the paired terms
/// t_j = a_j - a_{j+1}, a_j = C(w-1,j) q^-j, a_{w-D+1} = 0, so that
/// theta = 1 - (t_1 + t_3 + ...) = 1 - a_1 + (t_2 + t_4 + ...).
struct ThetaExpansion {
  ExactRational theta;
  std::vector<ExactRational> terms;  // terms[j-1] = t_j for j = 1..w-D
  std::vector<ExactRational> ratios; // ratios[j] = r_j = w/(j+1) - 1 for j = 0..w-D-1
  bool terms_nonnegative = false;
  bool theta_at_most_one = false;
  bool theta_lower_bound = false;    // theta >= 1 - (w-1)/q
  bool ratios_bounded = false;       // |r_j| <= n
  bool groupings_consistent = false; // both regroupings reproduce theta
  bool lambda_identity = false;      // lambda_w = normaliser * (1 - 1/q) * theta

  bool all() const {
    return terms_nonnegative && theta_at_most_one && theta_lower_bound && ratios_bounded &&
           groupings_consistent && lambda_identity;
  }
};

ThetaExpansion theta_expansion(std::size_t n, std::size_t k, std::uint32_t q, std::size_t w);

struct MuSandwich {
  ExactRational scaled;  // mu_w / normaliser
  ExactRational lower;   // (1 - 1/q)(1 - w/q)
  bool lower_holds = false;
  bool upper_holds = false;  // scaled <= 1
};

/// Needs 1 <= w <= n.
MuSandwich mu_sandwich(std::size_t n, std::size_t k, std::uint32_t q, std::size_t w);

struct StirlingCheck {
  long double log_mu = 0;     // ln mu_w
  long double log_bound = 0;  // ln(4 e n) + n H(w/n) + (w - (n-k)) ln q
  bool holds = false;
};

/// mu_w <= 4 e n exp(n H(w/n)) q^(w-(n-k)) with the natural-log entropy H,
/// compared in the log domain with a 1e-9 guard. Needs 1 <= w <= n.
StirlingCheck stirling_upper_bound(std::size_t n, std::size_t k, std::uint32_t q, std::size_t w);

enum class FullRankVariant {
  Exact,  // prod_{j=0}^{k-1} (1 - q^(j-n))
  Truncated,  // prod_{j=1}^{k-1} (1 - q^(j-n)), first factor taken as 1
};

FullRankVariant parse_full_rank_variant(std::string_view name);
std::string_view to_string(FullRankVariant v);

ExactRational full_rank_prob(std::size_t n, std::size_t k, std::uint32_t q, FullRankVariant variant);
/// 1 - 2 / q^(n-k).
ExactRational full_rank_lower_bound(std::size_t n, std::size_t k, std::uint32_t q);

struct Thresholds {
  double w_low_real = 0;  // n - k - 2n / ln q
  long w_low = 0;         // floor(w_low_real)
  bool a1_vacuous = false;  // w_low < 1
  std::size_t w_up = 0;   // n - k + 5
  bool a2_vacuous = false;  // w_up > n
  ExactRational a2_band;  // 3n / q
};

Thresholds thresholds(std::size_t n, std::size_t k, std::uint32_t q);

struct TheoremBound {
  ExactRational raw;      // 1 - 18 q / n^2
  ExactRational clamped;  // raw clamped to [0, 1]
};

TheoremBound theorem_bound(std::size_t n, std::uint32_t q);

struct RegimeReport {
  double lower = 0;  // 1 / sqrt(ln n)
  double upper = 0;  // 1 - 1 / sqrt(ln n)
  double rate = 0;   // k / n
  bool interval_empty = false;
  bool in_regime = false;
  double q_over_n = 0;
};

/// Needs n >= 4.
RegimeReport regime_check(std::size_t n, std::size_t k, std::uint32_t q);

// Exhaustive check of every closed-form inequality over a parameter grid.
struct SweepCategory {
  std::string_view name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

struct SweepFailure {
  std::string_view check;
  std::size_t n, k, w;
  std::uint32_t q;
};

struct BoundsSweepReport {
  std::size_t n_min = 4, n_max = 12;
  std::uint32_t q_max = 64;
  std::vector<SweepCategory> categories;
  std::vector<SweepFailure> failures;  // first few failures only

  bool passed() const;
  std::uint64_t total_checked() const;
};

/// n in [n_min, n_max], 1 <= k < n, prime powers n <= q <= q_max, every valid w.
BoundsSweepReport bounds_sweep(std::size_t n_min, std::size_t n_max, std::uint32_t q_max);

}  // namespace wtspec::enumerators
