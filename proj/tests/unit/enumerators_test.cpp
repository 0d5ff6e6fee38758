#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "oracles.hpp"
#include "wtspec/codes/reed_solomon.hpp"
#include "wtspec/codes/spectrum.hpp"
#include "wtspec/enumerators/enumerators.hpp"
#include "wtspec/error.hpp"

using namespace wtspec;
using namespace wtspec::enumerators;
using algebra::Elem;
using algebra::Field;
using algebra::Matrix;

namespace {

// Calls body(G) for every k x n matrix over f.
template <class F>
void for_all_matrices(const algebra::FieldPtr& f, std::size_t k, std::size_t n, F&& body) {
  const std::uint32_t q = f->q();
  Matrix g(f, k, n);
  std::vector<std::uint32_t> d(k * n, 0);
  for (;;) {
    body(g);
    std::size_t i = 0;
    while (i < d.size() && ++d[i] == q) {
      d[i] = 0;
      g(i / n, i % n) = Elem{0};
      ++i;
    }
    if (i == d.size()) return;
    g(i / n, i % n) = Elem{d[i]};
  }
}

// N_w(G) for every w, by encoding each nonzero message.
std::vector<std::uint64_t> message_weights(const Matrix& g) {
  const auto& f = g.field();
  const std::size_t k = g.rows(), n = g.cols();
  std::vector<std::uint64_t> out(n + 1, 0);
  std::vector<std::uint32_t> x(k, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < k && ++x[i] == f.q()) x[i++] = 0;
    if (i == k) break;
    std::size_t w = 0;
    for (std::size_t c = 0; c < n; ++c) {
      Elem acc{0};
      for (std::size_t r = 0; r < k; ++r) acc = f.add(acc, f.mul(Elem{x[r]}, g(r, c)));
      w += acc.value != 0;
    }
    ++out[w];
  }
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::IoError;
}

}  // namespace

TEST(MdsSpectrum, KnownValues) {
  const auto a = mds_spectrum(4, 2, 5);
  EXPECT_EQ(a.d, 3u);
  EXPECT_EQ(a.lambda, (std::vector<BigInt>{1, 0, 0, 16, 8}));
  const auto b = mds_spectrum(6, 3, 7);
  EXPECT_EQ(b.lambda[4], 90);
  EXPECT_EQ(b.lambda[5], 108);
  EXPECT_EQ(b.lambda[6], 144);
  EXPECT_EQ(mds_spectrum(9, 5, 32).lambda[9], 25214842);
}

TEST(MdsSpectrum, MatchesReedSolomonEnumeration) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u}) {
    std::uint32_t p = 0, m = 0;
    algebra::prime_power(q, &p, &m);
    const auto f = Field::create(p, m);
    for (std::size_t n = 1; n <= q && n <= 8; ++n)
      for (std::size_t k = 1; k <= n && k <= 4; ++k) {
        const auto rs = codes::reed_solomon(f, n, k);
        EXPECT_EQ(codes::spectrum(rs, codes::Strategy::Auto).counts, mds_spectrum(n, k, q).lambda)
            << n << "," << k << "," << q;
      }
  }
}

TEST(MdsSpectrum, SumsToCodeSize) {
  for (auto [n, k, q] : {std::tuple{10u, 4u, 11u}, {12u, 7u, 13u}, {30u, 11u, 32u}}) {
    BigInt s = 0;
    for (const auto& l : mds_spectrum(n, k, q).lambda) {
      EXPECT_GE(l, 0);
      s += l;
    }
    EXPECT_EQ(s, big_pow(q, k));
  }
}

TEST(MdsSpectrum, Errors) {
  EXPECT_EQ(code_of([] { mds_spectrum(6, 3, 5); }), ErrorCode::QSmallerThanN);
  EXPECT_EQ(code_of([] { mds_spectrum(6, 3, 6); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { mds_spectrum(3, 4, 5); }), ErrorCode::InvalidArgument);
}

TEST(ExpectedSpectrum, KnownValue) {
  const auto e = expected_spectrum(4, 2, 5);
  EXPECT_EQ(e.mu[3], rational(6144, 625));
  EXPECT_EQ(e.var_bound[3], rational(6144 * 11, 625));
}

TEST(ExpectedSpectrum, ExhaustiveMeanAndVariance) {
  for (auto [p, m, k, n] : {std::tuple{2u, 1u, 2u, 4u}, {3u, 1u, 2u, 3u}, {2u, 2u, 2u, 3u}, {5u, 1u, 1u, 3u}}) {
    const auto f = Field::create(p, m);
    const std::uint32_t q = f->q();
    std::vector<BigInt> sum(n + 1, BigInt(0)), sum_sq(n + 1, BigInt(0));
    BigInt count = 0;
    for_all_matrices(f, k, n, [&](const Matrix& g) {
      const auto w = message_weights(g);
      for (std::size_t i = 0; i <= n; ++i) {
        sum[i] += BigInt(static_cast<unsigned long>(w[i]));
        sum_sq[i] += BigInt(static_cast<unsigned long>(w[i] * w[i]));
      }
      count += 1;
    });
    const auto e = expected_spectrum(n, k, q);
    for (std::size_t w = 1; w <= n; ++w) {
      const ExactRational mean = rational(sum[w], count);
      EXPECT_EQ(mean, e.mu[w]) << "q=" << q << " w=" << w;
      const ExactRational var = rational(sum_sq[w], count) - mean * mean;
      EXPECT_LE(var, e.var_bound[w]) << "q=" << q << " w=" << w;
    }
  }
}

TEST(ExpectedSpectrum, TotalIsAllNonzeroMessagesMinusKernel) {
  // A nonzero message maps to a nonzero word with probability 1 - q^-n.
  const auto e = expected_spectrum(7, 3, 4);
  ExactRational s = 0;
  for (std::size_t w = 1; w <= 7; ++w) s += e.mu[w];
  EXPECT_EQ(s, ExactRational(big_pow(4, 3) - 1) * (1 - ExactRational(1, 1 << 14)));
}

TEST(FullRank, ExhaustiveCounts) {
  for (auto [p, k, n] : {std::tuple{2u, 2u, 4u}, {3u, 2u, 3u}, {5u, 2u, 2u}, {2u, 3u, 3u}}) {
    const auto f = Field::create(p, 1);
    std::uint64_t full = 0, total = 0;
    for_all_matrices(f, k, n, [&](const Matrix& g) {
      full += algebra::rank(g) == k;
      ++total;
    });
    EXPECT_EQ(full_rank_prob(n, k, p, FullRankVariant::Exact),
              rational(BigInt(static_cast<unsigned long>(full)), BigInt(static_cast<unsigned long>(total))));
    if (p == 2 && k == 2 && n == 4) EXPECT_EQ(full, 210u);
  }
}

TEST(FullRank, Variants) {
  EXPECT_EQ(full_rank_prob(4, 2, 2, FullRankVariant::Exact), rational(105, 128));
  EXPECT_EQ(full_rank_prob(4, 2, 5, FullRankVariant::Exact), rational(77376, 78125));
  // The variant without the j = 0 factor differs by exactly 1 - q^-n.
  EXPECT_EQ(full_rank_prob(4, 2, 2, FullRankVariant::Truncated) * (1 - ExactRational(1, 16)), rational(105, 128));
  EXPECT_EQ(full_rank_lower_bound(4, 2, 5), rational(23, 25));
  EXPECT_EQ(parse_full_rank_variant("truncated"), FullRankVariant::Truncated);
  EXPECT_EQ(code_of([] { parse_full_rank_variant("other"); }), ErrorCode::InvalidArgument);
}

TEST(Thresholds, ProbeParameters) {
  const auto a = thresholds(16, 4, 25);
  EXPECT_NEAR(a.w_low_real, 2.0587, 1e-4);
  EXPECT_EQ(a.w_low, 2);
  EXPECT_FALSE(a.a1_vacuous);
  EXPECT_EQ(a.w_up, 17u);
  EXPECT_TRUE(a.a2_vacuous);

  const auto b = thresholds(9, 5, 32);
  EXPECT_NEAR(b.w_low_real, -1.1937, 1e-4);
  EXPECT_TRUE(b.a1_vacuous);
  EXPECT_EQ(b.w_up, 9u);
  EXPECT_FALSE(b.a2_vacuous);
  EXPECT_EQ(b.a2_band, rational(27, 32));
}

TEST(TheoremBound, Values) {
  const auto a = theorem_bound(9, 32);
  EXPECT_EQ(a.raw, rational(-55, 9));
  EXPECT_EQ(a.clamped, 0);
  const auto b = theorem_bound(100, 101);
  EXPECT_EQ(b.raw, rational(4091, 5000));
  EXPECT_EQ(b.clamped, b.raw);
}

TEST(Regime, IntervalForLargeAndSmallLengths) {
  const auto r = regime_check(100, 50, 101);
  EXPECT_NEAR(r.lower, 1 / std::sqrt(std::log(100.0)), 1e-12);
  EXPECT_NEAR(r.lower, 0.466, 5e-4);
  EXPECT_NEAR(r.upper, 0.534, 5e-4);
  EXPECT_TRUE(r.in_regime);
  EXPECT_FALSE(r.interval_empty);
  EXPECT_NEAR(r.q_over_n, 1.01, 1e-12);
  // 1/sqrt(ln 9) > 1/2: the interval is empty at desk scale.
  EXPECT_TRUE(regime_check(9, 5, 32).interval_empty);
  EXPECT_FALSE(regime_check(9, 5, 32).in_regime);
  EXPECT_EQ(code_of([] { regime_check(3, 1, 3); }), ErrorCode::InvalidArgument);
}
