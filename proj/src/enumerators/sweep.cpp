#include <array>

#include "wtspec/algebra/field.hpp"
#include "wtspec/enumerators/enumerators.hpp"

namespace wtspec::enumerators {
namespace {

constexpr std::size_t kMaxRecordedFailures = 32;

enum Category : std::size_t {
  LambdaPositive,
  LambdaTotal,
  MuTotal,
  Ratio,
  Theta,
  Sandwich,
  Stirling,
  FullRankBound,
  FullRankOrder,
  kCategoryCount,
};

constexpr std::array<std::string_view, kCategoryCount> kNames = {
    "lambda_positive", "lambda_total",   "mu_total",       "ratio_bounds",     "theta_expansion",
    "mu_sandwich",     "stirling_bound", "full_rank_bound", "full_rank_order",
};

}  // namespace

bool BoundsSweepReport::passed() const {
  for (const auto& c : categories)
    if (c.failed != 0) return false;
  return true;
}

std::uint64_t BoundsSweepReport::total_checked() const {
  std::uint64_t s = 0;
  for (const auto& c : categories) s += c.checked;
  return s;
}

BoundsSweepReport bounds_sweep(std::size_t n_min, std::size_t n_max, std::uint32_t q_max) {
  BoundsSweepReport report;
  report.n_min = n_min;
  report.n_max = n_max;
  report.q_max = q_max;
  for (auto name : kNames) report.categories.push_back({name, 0, 0});

  auto record = [&](Category cat, bool ok, std::size_t n, std::size_t k, std::uint32_t q, std::size_t w) {
    auto& c = report.categories[cat];
    ++c.checked;
    if (ok) return;
    ++c.failed;
    if (report.failures.size() < kMaxRecordedFailures) report.failures.push_back({c.name, n, k, w, q});
  };

  for (std::size_t n = n_min; n <= n_max; ++n) {
    for (std::uint32_t q = static_cast<std::uint32_t>(n); q <= q_max; ++q) {
      if (!algebra::prime_power(q, nullptr, nullptr)) continue;
      for (std::size_t k = 1; k < n; ++k) {
        const MdsSpectrum mds = mds_spectrum(n, k, q);
        const ExpectedSpectrum mu = expected_spectrum(n, k, q);

        BigInt lambda_sum = 0;
        for (std::size_t w = mds.d; w <= n; ++w) {
          lambda_sum += mds.lambda[w];
          record(LambdaPositive, sgn(mds.lambda[w]) > 0, n, k, q, w);
          record(Ratio, ratio_bounds(n, k, q, w).holds, n, k, q, w);
          record(Theta, theta_expansion(n, k, q, w).all(), n, k, q, w);
        }
        record(LambdaTotal, lambda_sum == big_pow(q, k) - 1, n, k, q, 0);

        ExactRational mu_sum = 0;
        for (std::size_t w = 1; w <= n; ++w) {
          mu_sum += mu.mu[w];
          const MuSandwich s = mu_sandwich(n, k, q, w);
          record(Sandwich, s.lower_holds && s.upper_holds, n, k, q, w);
          record(Stirling, stirling_upper_bound(n, k, q, w).holds, n, k, q, w);
        }
        record(MuTotal, mu_sum == rational((big_pow(q, n) - 1) * (big_pow(q, k) - 1), big_pow(q, n)), n, k,
               q, 0);

        const ExactRational exact = full_rank_prob(n, k, q, FullRankVariant::Exact);
        const ExactRational truncated = full_rank_prob(n, k, q, FullRankVariant::Truncated);
        record(FullRankBound, exact >= full_rank_lower_bound(n, k, q), n, k, q, 0);
        record(FullRankOrder, exact <= truncated, n, k, q, 0);
      }
    }
  }
  return report;
}

}  // namespace wtspec::enumerators
