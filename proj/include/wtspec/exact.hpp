#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace wtspec {

using BigInt = mpz_class;
// Always canonical (lowest terms, positive denominator) as long as every
// value is produced by arithmetic or passed through canonicalize().
using ExactRational = mpq_class;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline ExactRational rational(const BigInt& num, const BigInt& den) {
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

// "a/b", or "a" when the denominator is 1.
inline std::string to_string(const ExactRational& r) { return r.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

// Natural log of a positive rational, accurate far beyond double range.
long double log_of(const ExactRational& r);
long double log_of(const BigInt& z);

// Saturating integer power: returns false when base^exp exceeds limit.
bool pow_within(std::uint64_t base, std::uint64_t exp, std::uint64_t limit, std::uint64_t* out = nullptr);

}  // namespace wtspec
