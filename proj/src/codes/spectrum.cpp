#include "wtspec/codes/spectrum.hpp"

#include <string>

#include "wtspec/error.hpp"

namespace wtspec::codes {
namespace {

using algebra::Elem;
using algebra::Field;

void require_enumerable(std::uint32_t q, std::size_t dim, std::uint64_t cap, const char* what) {
  if (!pow_within(q, dim, cap)) {
    throw Error(ErrorCode::EnumerationTooLarge,
                std::string(what) + ": " + std::to_string(q) + "^" + std::to_string(dim) +
                    " words exceed the enumeration cap " + std::to_string(cap));
  }
}

// Scalar multiples x * row for every x in the field, laid out [x][col].
std::vector<Elem> multiples_of(const Field& f, std::span<const Elem> row) {
  const std::size_t n = row.size();
  std::vector<Elem> out(std::size_t{f.q()} * n);
  for (std::uint32_t x = 0; x < f.q(); ++x)
    for (std::size_t c = 0; c < n; ++c) out[x * n + c] = f.mul(Elem{x}, row[c]);
  return out;
}

}  // namespace

Strategy parse_strategy(std::string_view name) {
  if (name == "auto") return Strategy::Auto;
  if (name == "direct") return Strategy::Direct;
  if (name == "dual") return Strategy::Dual;
  throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + std::string(name) + "'");
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Direct: return "direct";
    case Strategy::Dual: return "dual";
  }
  return "auto";
}

WeightSpectrum enumerate_row_space(const Matrix& basis, std::uint64_t cap) {
  const Field& f = basis.field();
  const std::uint32_t q = f.q();
  const std::size_t n = basis.cols();
  const std::size_t r = basis.rows();
  require_enumerable(q, r, cap, "row space");

  std::vector<std::uint64_t> tally(n + 1, 0);
  std::vector<std::vector<Elem>> mults;
  mults.reserve(r);
  for (std::size_t i = 0; i < r; ++i) mults.push_back(multiples_of(f, basis.row(i)));

  std::vector<std::vector<Elem>> partial(r, std::vector<Elem>(n));
  std::vector<std::uint32_t> digits(r, 0);

  for (std::size_t lead = 0; lead < r; ++lead) {
    // Messages (0,..,0,1,x_{lead+1},..,x_{r-1}); partial[t] holds the word
    // with free digits t.. still zero.
    const std::size_t free = r - 1 - lead;
    auto row_lead = basis.row(lead);
    for (std::size_t t = 0; t <= free; ++t) partial[t].assign(row_lead.begin(), row_lead.end());
    std::fill(digits.begin(), digits.end(), 0);

    for (;;) {
      const auto& word = partial[free];
      std::size_t w = 0;
      for (std::size_t c = 0; c < n; ++c) w += word[c].value != 0;
      ++tally[w];

      std::size_t t = free;
      while (t > 0 && digits[t - 1] == q - 1) --t;
      if (t == 0) break;
      const std::size_t level = t - 1;  // digit being bumped
      const std::uint32_t d = ++digits[level];
      for (std::size_t l = level + 1; l < free; ++l) digits[l] = 0;
      const Elem* mult = mults[lead + 1 + level].data() + std::size_t{d} * n;
      auto& dst = partial[level + 1];
      const auto& src = partial[level];
      for (std::size_t c = 0; c < n; ++c) dst[c] = f.add(src[c], mult[c]);
      for (std::size_t l = level + 2; l <= free; ++l) partial[l] = dst;
    }
  }

  WeightSpectrum spec;
  spec.counts.assign(n + 1, BigInt(0));
  spec.counts[0] = 1;
  for (std::size_t w = 1; w <= n; ++w) {
    spec.counts[w] = BigInt(static_cast<unsigned long>(tally[w])) * (q - 1);
  }
  // tally[0] stays empty: independent rows never produce the zero word.
  return spec;
}

WeightSpectrum spectrum_direct(const LinearCode& code, std::uint64_t cap) {
  return enumerate_row_space(code.basis(), cap);
}

WeightSpectrum spectrum_dual(const LinearCode& code, std::uint64_t cap) {
  if (!code.full_rank()) {
    throw Error(ErrorCode::RankDeficient, "dual path needs a full-rank generator (rank " +
                                              std::to_string(code.rank()) + " < k = " +
                                              std::to_string(code.k()) + ")");
  }
  const std::size_t dual_dim = code.n() - code.k();
  require_enumerable(code.field().q(), dual_dim, cap, "dual code");
  const Matrix h = algebra::dual_generator(code.basis());
  return macwilliams_transform(enumerate_row_space(h, cap), code.field().q(), dual_dim);
}

Strategy resolve_strategy(const LinearCode& code, Strategy strategy) {
  if (strategy != Strategy::Auto) return strategy;
  if (!code.full_rank()) return Strategy::Direct;
  return code.rank() <= code.n() - code.k() ? Strategy::Direct : Strategy::Dual;
}

WeightSpectrum spectrum(const LinearCode& code, Strategy strategy, std::uint64_t cap) {
  return resolve_strategy(code, strategy) == Strategy::Dual ? spectrum_dual(code, cap)
                                                            : spectrum_direct(code, cap);
}

BigInt krawtchouk(std::size_t n, std::uint32_t q, std::size_t j, std::size_t w) {
  BigInt sum = 0;
  for (std::size_t i = 0; i <= j; ++i) {
    if (i > w || j - i > n - w) continue;
    BigInt term = binomial(w, i) * binomial(n - w, j - i) * big_pow(q - 1, j - i);
    if (i % 2 == 1) sum -= term;
    else sum += term;
  }
  return sum;
}

WeightSpectrum macwilliams_transform(const WeightSpectrum& spec, std::uint32_t q,
                                     std::size_t source_dim) {
  const std::size_t n = spec.n();
  const BigInt scale = big_pow(q, source_dim);
  WeightSpectrum out;
  out.counts.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (std::size_t w = 0; w <= n; ++w) {
      if (sgn(spec.counts[w]) == 0) continue;
      acc += spec.counts[w] * krawtchouk(n, q, j, w);
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), scale.get_mpz_t()) || sgn(acc) < 0) {
      throw Error(ErrorCode::NotALinearSpectrum,
                  "MacWilliams coefficient " + std::to_string(j) + " is not a nonnegative integer");
    }
    mpz_divexact(out.counts[j].get_mpz_t(), acc.get_mpz_t(), scale.get_mpz_t());
  }
  return out;
}

std::size_t min_distance(const LinearCode& code, Strategy strategy, std::uint64_t cap) {
  if (code.rank() == 0) throw Error(ErrorCode::ZeroCode, "the zero code has no minimum distance");
  return *spectrum(code, strategy, cap).min_weight();
}

bool is_mds(const LinearCode& code, Strategy strategy, std::uint64_t cap) {
  if (!code.full_rank()) throw Error(ErrorCode::RankDeficient, "MDS test needs rank == k");
  return min_distance(code, strategy, cap) == code.n() - code.k() + 1;
}

MessageWeightCounts message_counts_from_spectrum(const WeightSpectrum& spec, std::uint32_t q,
                                                 std::size_t k, std::size_t rank) {
  const BigInt mult = big_pow(q, k - rank);
  MessageWeightCounts out;
  out.counts.resize(spec.counts.size());
  out.counts[0] = mult - 1;
  for (std::size_t w = 1; w < spec.counts.size(); ++w) out.counts[w] = spec.counts[w] * mult;
  return out;
}

MessageWeightCounts message_weight_counts(const LinearCode& code, Strategy strategy,
                                          std::uint64_t cap) {
  return message_counts_from_spectrum(spectrum(code, strategy, cap), code.field().q(), code.k(),
                                      code.rank());
}

}  // namespace wtspec::codes
