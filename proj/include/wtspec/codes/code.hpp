#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wtspec/algebra/matrix.hpp"
#include "wtspec/exact.hpp"

namespace wtspec::codes {

using algebra::Matrix;
using algebra::Vector;

/// Row space of a k x n generator matrix. The nominal dimension k is the
/// number of rows; rank() is the true dimension and may be smaller.
class LinearCode {
 public:
  explicit LinearCode(Matrix generator);

  const algebra::Field& field() const { return generator_.field(); }
  const algebra::FieldPtr& field_ptr() const { return generator_.field_ptr(); }
  std::size_t n() const { return generator_.cols(); }
  std::size_t k() const { return generator_.rows(); }
  std::size_t rank() const { return reduced_.rank; }
  bool full_rank() const { return reduced_.rank == k(); }

  const Matrix& generator() const { return generator_; }
  /// Reduced row echelon basis of the row space (rank rows).
  const Matrix& basis() const { return reduced_.basis; }
  const std::vector<std::size_t>& pivots() const { return reduced_.pivots; }

 private:
  Matrix generator_;
  algebra::RowReduction reduced_;
};

/// Distinct-codeword counts A_0..A_n.
struct WeightSpectrum {
  std::vector<BigInt> counts;

  std::size_t n() const { return counts.size() - 1; }
  BigInt total() const;
  /// Smallest w >= 1 with A_w > 0.
  std::optional<std::size_t> min_weight() const;
  bool operator==(const WeightSpectrum&) const = default;
};

/// N_w: number of nonzero messages x with weight(x G) = w. Index 0 holds the
/// nonzero messages in the kernel of G (q^(k-rank) - 1 of them), so the counts
/// sum to q^k - 1.
struct MessageWeightCounts {
  std::vector<BigInt> counts;

  std::size_t n() const { return counts.size() - 1; }
  const BigInt& at(std::size_t w) const { return counts.at(w); }
  bool operator==(const MessageWeightCounts&) const = default;
};

std::size_t hamming_weight(std::span<const algebra::Elem> v);
inline std::size_t hamming_weight(const Vector& v) { return hamming_weight(v.entries()); }

/// x * G. Throws FieldMismatch or LengthMismatch.
Vector encode(const LinearCode& code, const Vector& x);

}  // namespace wtspec::codes
