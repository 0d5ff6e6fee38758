#include "wtspec/codes/reed_solomon.hpp"

#include <string>

#include "wtspec/error.hpp"

namespace wtspec::codes {

LinearCode reed_solomon(const algebra::FieldPtr& field, std::size_t n, std::size_t k) {
  if (n > field->q()) {
    throw Error(ErrorCode::LengthExceedsField,
                "RS length " + std::to_string(n) + " > q = " + std::to_string(field->q()));
  }
  if (k == 0 || k > n) throw Error(ErrorCode::InvalidArgument, "RS needs 1 <= k <= n");
  Matrix g(field, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g(i, j) = field->pow(algebra::Elem{static_cast<std::uint32_t>(j)}, i);
  return LinearCode(std::move(g));
}

}  // namespace wtspec::codes
