#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wtspec/algebra/field.hpp"

namespace wtspec::ensemble {

inline constexpr std::uint64_t kMaxExhaustiveMatrices = 10'000'000;

/// Results for one weight w. A(x) is the event weight(x G) = w; pairs are
/// unordered pairs of distinct nonzero messages.
struct IndependenceEntry {
  std::size_t w = 0;
  std::uint64_t independent_pairs = 0;      // x1 not a scalar multiple of x2
  std::uint64_t independent_failures = 0;   // product rule violated (must be 0)
  std::uint64_t dependent_pairs = 0;        // x1 = a x2 for some a != 0
  std::uint64_t dependent_unequal = 0;      // dependent pairs where the product rule fails
};

struct IndependenceReport {
  std::uint32_t q = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t matrices = 0;  // q^(kn), all enumerated
  std::vector<IndependenceEntry> entries;

  bool passed() const;
};

/// Over every k x n matrix G, checks
///   #{G : A(x1) and A(x2)} * q^(kn) == #{G : A(x1)} * #{G : A(x2)}
/// exactly for every pair of non-proportional messages. With `weight` unset
/// every w in 0..n is audited. Throws TooLargeForExhaustive when q^(kn) > 10^7.
IndependenceReport independence_audit(const algebra::FieldPtr& field, std::size_t k, std::size_t n,
                                      std::optional<std::size_t> weight = std::nullopt);

}  // namespace wtspec::ensemble
