#include <cmath>

#include "wtspec/error.hpp"
#include "wtspec/exact.hpp"

namespace wtspec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::InvertZero: return "InvertZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::NotALinearSpectrum: return "NotALinearSpectrum";
    case ErrorCode::ZeroCode: return "ZeroCode";
    case ErrorCode::LengthExceedsField: return "LengthExceedsField";
    case ErrorCode::QSmallerThanN: return "QSmallerThanN";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

long double log_of(const BigInt& z) {
  if (sgn(z) <= 0) throw Error(ErrorCode::InvalidArgument, "log of non-positive integer");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(static_cast<long double>(mant)) + static_cast<long double>(exp2) * std::log(2.0L);
}

long double log_of(const ExactRational& r) {
  return log_of(BigInt(r.get_num())) - log_of(BigInt(r.get_den()));
}

bool pow_within(std::uint64_t base, std::uint64_t exp, std::uint64_t limit, std::uint64_t* out) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) return false;
    acc *= base;
    if (acc > limit) return false;
  }
  if (out) *out = acc;
  return acc <= limit;
}

}  // namespace wtspec
