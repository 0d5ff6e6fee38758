#include <cmath>
#include <string>

#include "wtspec/enumerators/enumerators.hpp"
#include "wtspec/error.hpp"

namespace wtspec::enumerators {
namespace {

void require_mds_weight(std::size_t n, std::size_t k, std::uint32_t q, std::size_t w) {
  if (q < n) throw Error(ErrorCode::QSmallerThanN, "bound needs q >= n");
  if (w + k < n + 1 || w > n) {
    throw Error(ErrorCode::WeightOutOfRange,
                "weight " + std::to_string(w) + " outside [n-k+1, n]");
  }
}

ExactRational inverse_power(std::uint32_t q, std::size_t j) { return rational(BigInt(1), big_pow(q, j)); }

}  // namespace

RatioBounds ratio_bounds(std::size_t n, std::size_t k, std::uint32_t q, std::size_t w) {
  require_mds_weight(n, k, q, w);
  const MdsSpectrum mds = mds_spectrum(n, k, q);
  const ExpectedSpectrum mu = expected_spectrum(n, k, q);
  const ExactRational one = 1;
  const ExactRational qq = q;

  RatioBounds b;
  b.lower = (one - one / qq) * (one - ExactRational(static_cast<unsigned long>(w - 1)) / qq);
  if (w < q) b.upper = one / (one - ExactRational(static_cast<unsigned long>(w)) / qq);
  b.ratio = ExactRational(mds.lambda[w]) / mu.mu[w];
  b.holds = b.lower <= b.ratio && (!b.upper || b.ratio <= *b.upper);
  return b;
}

ThetaExpansion theta_expansion(std::size_t n, std::size_t k, std::uint32_t q, std::size_t w) {
  require_mds_weight(n, k, q, w);
  const std::size_t top = w - (n - k + 1);

  // a[j] = C(w-1, j) / q^j for j = 0..top, a[top+1] = 0.
  std::vector<ExactRational> a(top + 2);
  for (std::size_t j = 0; j <= top; ++j) a[j] = ExactRational(binomial(w - 1, j)) * inverse_power(q, j);

  ThetaExpansion t;
  t.theta = 0;
  for (std::size_t j = 0; j <= top; ++j) {
    if (j % 2 == 1) t.theta -= a[j];
    else t.theta += a[j];
  }

  t.terms.reserve(top);
  for (std::size_t j = 1; j <= top; ++j) t.terms.push_back(a[j] - a[j + 1]);
  t.ratios.reserve(top);
  for (std::size_t j = 0; j < top; ++j) {
    t.ratios.push_back(rational(BigInt(static_cast<unsigned long>(w)),
                                BigInt(static_cast<unsigned long>(j + 1))) - 1);
  }

  t.terms_nonnegative = true;
  for (const auto& term : t.terms) t.terms_nonnegative = t.terms_nonnegative && sgn(term) >= 0;

  const ExactRational one = 1;
  t.theta_at_most_one = t.theta <= one;
  t.theta_lower_bound =
      t.theta >= one - rational(BigInt(static_cast<unsigned long>(w - 1)), BigInt(q));

  t.ratios_bounded = true;
  for (std::size_t j = 0; j < top; ++j) {
    const ExactRational& r = t.ratios[j];
    // r_j is also the ratio of consecutive binomials C(w-1,j+1) / C(w-1,j).
    const bool matches = r == rational(binomial(w - 1, j + 1), binomial(w - 1, j));
    t.ratios_bounded = t.ratios_bounded && matches && abs(r) <= ExactRational(static_cast<unsigned long>(n));
  }

  ExactRational odd_grouping = one, even_grouping = top >= 1 ? one - a[1] : one;
  for (std::size_t j = 1; j <= top; ++j) {
    if (j % 2 == 1) odd_grouping -= t.terms[j - 1];
    else even_grouping += t.terms[j - 1];
  }
  t.groupings_consistent = odd_grouping == t.theta && even_grouping == t.theta;

  const MdsSpectrum mds = mds_spectrum(n, k, q);
  t.lambda_identity =
      ExactRational(mds.lambda[w]) == spectrum_normalizer(n, k, q, w) * (one - one / ExactRational(q)) * t.theta;
  return t;
}

MuSandwich mu_sandwich(std::size_t n, std::size_t k, std::uint32_t q, std::size_t w) {
  if (w < 1 || w > n) throw Error(ErrorCode::WeightOutOfRange, "weight outside [1, n]");
  const ExpectedSpectrum mu = expected_spectrum(n, k, q);
  const ExactRational one = 1;
  const ExactRational qq = q;
  MuSandwich s;
  s.scaled = mu.mu[w] / spectrum_normalizer(n, k, q, w);
  s.lower = (one - one / qq) * (one - ExactRational(static_cast<unsigned long>(w)) / qq);
  s.lower_holds = s.lower <= s.scaled;
  s.upper_holds = s.scaled <= one;
  return s;
}

StirlingCheck stirling_upper_bound(std::size_t n, std::size_t k, std::uint32_t q, std::size_t w) {
  if (w < 1 || w > n) throw Error(ErrorCode::WeightOutOfRange, "weight outside [1, n]");
  const ExpectedSpectrum mu = expected_spectrum(n, k, q);
  const long double nn = static_cast<long double>(n);
  const long double x = static_cast<long double>(w) / nn;
  long double entropy = 0;
  if (w < n) entropy = -x * std::log(x) - (1 - x) * std::log(1 - x);
  StirlingCheck c;
  c.log_mu = log_of(mu.mu[w]);
  c.log_bound = std::log(4.0L * std::exp(1.0L) * nn) + nn * entropy +
                (static_cast<long double>(w) - static_cast<long double>(n - k)) *
                    std::log(static_cast<long double>(q));
  c.holds = c.log_mu <= c.log_bound + 1e-9L;
  return c;
}

}  // namespace wtspec::enumerators
