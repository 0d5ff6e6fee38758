#include "wtspec/codes/code.hpp"

#include <utility>

#include "wtspec/error.hpp"

namespace wtspec::codes {

LinearCode::LinearCode(Matrix generator)
    : generator_(std::move(generator)), reduced_(algebra::row_reduce(generator_)) {
  if (generator_.rows() == 0 || generator_.cols() == 0) {
    throw Error(ErrorCode::InvalidArgument, "a code needs k >= 1 and n >= 1");
  }
  if (generator_.rows() > generator_.cols()) {
    throw Error(ErrorCode::InvalidArgument, "a code needs k <= n");
  }
}

BigInt WeightSpectrum::total() const {
  BigInt s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

std::optional<std::size_t> WeightSpectrum::min_weight() const {
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (sgn(counts[w]) > 0) return w;
  return std::nullopt;
}

std::size_t hamming_weight(std::span<const algebra::Elem> v) {
  std::size_t w = 0;
  for (auto e : v) w += e.value != 0;
  return w;
}

Vector encode(const LinearCode& code, const Vector& x) { return algebra::vec_mat(x, code.generator()); }

}  // namespace wtspec::codes
