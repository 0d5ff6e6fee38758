#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wtspec/algebra/field.hpp"

namespace wtspec::algebra {

class Vector {
 public:
  Vector(FieldPtr field, std::size_t length);
  Vector(FieldPtr field, std::vector<Elem> entries);
  /// Validates every index against the field order.
  static Vector from_indices(FieldPtr field, const std::vector<std::uint32_t>& indices);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t size() const { return entries_.size(); }
  Elem operator[](std::size_t i) const { return entries_[i]; }
  Elem& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Elem> entries() const { return entries_; }

  bool operator==(const Vector& other) const;

 private:
  FieldPtr field_;
  std::vector<Elem> entries_;
};

/// Dense row-major matrix over one field. Zero-row matrices are allowed; they
/// appear as row-space bases of the zero code and as duals of [n,n] codes.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows);
  static Matrix identity(FieldPtr field, std::size_t size);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  bool operator==(const Matrix& other) const;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct RowReduction {
  std::size_t rank = 0;
  Matrix basis;                     // rank x n, reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each basis row
};

/// Exact Gauss-Jordan elimination: the pivot in each column is the first
/// nonzero entry at or below the current row.
RowReduction row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Parity-check matrix H with G * H^T = 0 and rank n - k. Throws
/// RankDeficient unless G has full row rank.
Matrix dual_generator(const Matrix& g);

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

/// Row vector times matrix.
Vector vec_mat(const Vector& x, const Matrix& g);

}  // namespace wtspec::algebra
