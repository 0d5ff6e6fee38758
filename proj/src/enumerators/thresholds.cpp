#include <algorithm>
#include <cmath>

#include "wtspec/enumerators/enumerators.hpp"
#include "wtspec/error.hpp"

namespace wtspec::enumerators {

Thresholds thresholds(std::size_t n, std::size_t k, std::uint32_t q) {
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "need q >= 2");
  Thresholds t;
  const auto nd = static_cast<double>(n);
  t.w_low_real = static_cast<double>(n - k) - 2.0 * nd / std::log(static_cast<double>(q));
  t.w_low = static_cast<long>(std::floor(t.w_low_real));
  t.a1_vacuous = t.w_low < 1;
  t.w_up = n - k + 5;
  t.a2_vacuous = t.w_up > n;
  t.a2_band = rational(BigInt(static_cast<unsigned long>(3 * n)), BigInt(q));
  return t;
}

TheoremBound theorem_bound(std::size_t n, std::uint32_t q) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 1");
  const BigInt nn = BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n);
  TheoremBound b;
  b.raw = ExactRational(1) - rational(BigInt(18) * q, nn);
  b.clamped = std::clamp(b.raw, ExactRational(0), ExactRational(1));
  return b;
}

RegimeReport regime_check(std::size_t n, std::size_t k, std::uint32_t q) {
  if (n < 4) throw Error(ErrorCode::InvalidArgument, "regime check needs n >= 4");
  RegimeReport r;
  const double s = 1.0 / std::sqrt(std::log(static_cast<double>(n)));
  r.lower = s;
  r.upper = 1.0 - s;
  r.rate = static_cast<double>(k) / static_cast<double>(n);
  r.interval_empty = r.lower > r.upper;
  r.in_regime = !r.interval_empty && r.rate >= r.lower && r.rate <= r.upper;
  r.q_over_n = static_cast<double>(q) / static_cast<double>(n);
  return r;
}

}  // namespace wtspec::enumerators
