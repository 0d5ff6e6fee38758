#pragma once

#include <cstdint>
#include <optional>

#include "wtspec/algebra/field.hpp"
#include "wtspec/algebra/matrix.hpp"

namespace wtspec::algebra {

// Vigna's SplitMix64.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// 32-bit draws split from SplitMix64 words, low half first, then high half.
/// A half left over after one draw is used by the next one. Single owner.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : gen_(seed) {}

  std::uint32_t next_u32() {
    if (pending_) {
      const std::uint32_t v = *pending_;
      pending_.reset();
      return v;
    }
    const std::uint64_t word = gen_.next();
    pending_ = static_cast<std::uint32_t>(word >> 32);
    return static_cast<std::uint32_t>(word);
  }

  /// Unbiased draw from [0, bound): accept v < floor(2^32 / bound) * bound,
  /// return v mod bound.
  std::uint32_t uniform(std::uint32_t bound) {
    const std::uint64_t limit = ((std::uint64_t{1} << 32) / bound) * bound;
    for (;;) {
      const std::uint32_t v = next_u32();
      if (v < limit) return v % bound;
    }
  }

 private:
  SplitMix64 gen_;
  std::optional<std::uint32_t> pending_;
};

/// k x n matrix with i.i.d. uniform entries, drawn in row-major order.
Matrix random_matrix(FieldPtr field, std::size_t k, std::size_t n, SeedStream& stream);

/// Per-sample seed: first SplitMix64 output seeded with
/// master ^ (index * 0x9E3779B97F4A7C15).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace wtspec::algebra
