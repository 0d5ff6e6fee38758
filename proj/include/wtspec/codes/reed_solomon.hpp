#pragma once

#include <cstddef>

#include "wtspec/codes/code.hpp"

namespace wtspec::codes {

/// Vandermonde generator G[i][j] = a_j^i over the first n field elements
/// (a_j = index j, 0^0 = 1). Throws LengthExceedsField when n > q.
LinearCode reed_solomon(const algebra::FieldPtr& field, std::size_t n, std::size_t k);

}  // namespace wtspec::codes
