#include <algorithm>

#include "wtspec/ensemble/ensemble.hpp"
#include "wtspec/error.hpp"

namespace wtspec::ensemble {

bool check_a1(const MessageWeightCounts& counts, const enumerators::Thresholds& th) {
  if (th.a1_vacuous) return true;
  const auto top = std::min<std::size_t>(static_cast<std::size_t>(th.w_low), counts.n());
  for (std::size_t w = 1; w <= top; ++w)
    if (sgn(counts.at(w)) != 0) return false;
  return true;
}

bool check_a2(const MessageWeightCounts& counts, const enumerators::MdsSpectrum& mds) {
  if (counts.n() != mds.n) throw Error(ErrorCode::LengthMismatch, "counts and MDS spectrum lengths differ");
  const std::size_t n = mds.n;
  const BigInt q = mds.q;
  const BigInt slack = BigInt(static_cast<unsigned long>(3 * n));
  for (std::size_t w = n - mds.k + 5; w <= n; ++w) {
    const BigInt scaled = q * counts.at(w);
    if (scaled < mds.lambda[w] * (q - slack)) return false;
    if (scaled > mds.lambda[w] * (q + slack)) return false;
  }
  return true;
}

bool concentration_check(const MessageWeightCounts& counts, const enumerators::ExpectedSpectrum& expected,
                         std::size_t w) {
  const ExactRational& mu = expected.mu.at(w);
  const ExactRational deviation = abs(ExactRational(counts.at(w)) - mu);
  return deviation >= mu / ExactRational(static_cast<unsigned long>(expected.n));
}

ExactRational chebyshev_bound(const enumerators::ExpectedSpectrum& expected, std::size_t w) {
  const auto n = static_cast<unsigned long>(expected.n);
  const ExactRational bound = ExactRational(n * n * (2UL * expected.q + 1)) / expected.mu.at(w);
  return std::min(bound, ExactRational(1));
}

}  // namespace wtspec::ensemble
