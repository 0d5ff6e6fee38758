#include <string>

#include "wtspec/algebra/field.hpp"
#include "wtspec/enumerators/enumerators.hpp"
#include "wtspec/error.hpp"

namespace wtspec::enumerators {
namespace {

void require_code_params(std::size_t n, std::size_t k, std::uint32_t q) {
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  if (!algebra::prime_power(q, nullptr, nullptr)) {
    throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  }
}

}  // namespace

MdsSpectrum mds_spectrum(std::size_t n, std::size_t k, std::uint32_t q) {
  require_code_params(n, k, q);
  if (q < n) {
    throw Error(ErrorCode::QSmallerThanN,
                "MDS weight formula needs n <= q (n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
  }
  MdsSpectrum out{n, k, q, n - k + 1, std::vector<BigInt>(n + 1, BigInt(0))};
  out.lambda[0] = 1;
  for (std::size_t w = out.d; w <= n; ++w) {
    const std::size_t top = w - out.d;
    BigInt sum = 0;
    for (std::size_t j = 0; j <= top; ++j) {
      BigInt term = binomial(w - 1, j) * big_pow(q, top - j);
      if (j % 2 == 1) sum -= term;
      else sum += term;
    }
    out.lambda[w] = binomial(n, w) * (q - 1) * sum;
  }
  return out;
}

ExpectedSpectrum expected_spectrum(std::size_t n, std::size_t k, std::uint32_t q) {
  require_code_params(n, k, q);
  ExpectedSpectrum out{n, k, q, std::vector<ExactRational>(n + 1), std::vector<ExactRational>(n + 1)};
  const BigInt messages = big_pow(q, k) - 1;
  const BigInt space = big_pow(q, n);
  for (std::size_t w = 1; w <= n; ++w) {
    out.mu[w] = rational(binomial(n, w) * big_pow(q - 1, w) * messages, space);
    out.var_bound[w] = out.mu[w] * (2 * q + 1);
  }
  return out;
}

ExactRational spectrum_normalizer(std::size_t n, std::size_t k, std::uint32_t q, std::size_t w) {
  // C(n,w) q^w / q^(n-k), where w - (n-k) may be negative.
  if (w + k >= n) return ExactRational(binomial(n, w) * big_pow(q, w + k - n));
  return rational(binomial(n, w), big_pow(q, n - k - w));
}

FullRankVariant parse_full_rank_variant(std::string_view name) {
  if (name == "exact") return FullRankVariant::Exact;
  if (name == "truncated") return FullRankVariant::Truncated;
  throw Error(ErrorCode::InvalidArgument, "unknown full-rank variant '" + std::string(name) + "'");
}

std::string_view to_string(FullRankVariant v) {
  return v == FullRankVariant::Exact ? "exact" : "truncated";
}

ExactRational full_rank_prob(std::size_t n, std::size_t k, std::uint32_t q, FullRankVariant variant) {
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "need q >= 2");
  const BigInt space = big_pow(q, n);
  ExactRational prob = 1;
  for (std::size_t j = variant == FullRankVariant::Exact ? 0 : 1; j < k; ++j) {
    prob *= rational(space - big_pow(q, j), space);
  }
  return prob;
}

ExactRational full_rank_lower_bound(std::size_t n, std::size_t k, std::uint32_t q) {
  return ExactRational(1) - rational(BigInt(2), big_pow(q, n - k));
}

}  // namespace wtspec::enumerators
