#include "wtspec/algebra/random.hpp"

#include <utility>

#include "wtspec/error.hpp"

namespace wtspec::algebra {

Matrix random_matrix(FieldPtr field, std::size_t k, std::size_t n, SeedStream& stream) {
  if (k == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "random matrix needs k, n >= 1");
  const std::uint32_t q = field->q();
  Matrix g(std::move(field), k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) g(r, c) = Elem{stream.uniform(q)};
  return g;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return SplitMix64(master ^ (index * 0x9E3779B97F4A7C15ULL)).next();
}

}  // namespace wtspec::algebra
