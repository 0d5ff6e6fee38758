#include "wtspec/algebra/matrix.hpp"

#include <string>
#include <utility>

#include "wtspec/error.hpp"

namespace wtspec::algebra {
namespace {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(ErrorCode::FieldMismatch, "operands live in different fields");
}

}  // namespace

Vector::Vector(FieldPtr field, std::size_t length) : field_(std::move(field)), entries_(length) {}

Vector::Vector(FieldPtr field, std::vector<Elem> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  for (auto e : entries_)
    if (!field_->contains(e)) throw Error(ErrorCode::ElementOutOfRange, "entry outside field");
}

Vector Vector::from_indices(FieldPtr field, const std::vector<std::uint32_t>& indices) {
  std::vector<Elem> entries;
  entries.reserve(indices.size());
  for (auto i : indices) entries.emplace_back(i);
  return Vector(std::move(field), std::move(entries));
}

bool Vector::operator==(const Vector& other) const {
  return *field_ == *other.field_ && entries_ == other.entries_;
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::LengthMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const Elem e{rows[r][c]};
      if (!m.field().contains(e)) {
        throw Error(ErrorCode::ElementOutOfRange,
                    "entry " + std::to_string(rows[r][c]) + " outside GF(" +
                        std::to_string(m.field().q()) + ")");
      }
      m(r, c) = e;
    }
  }
  return m;
}

Matrix Matrix::identity(FieldPtr field, std::size_t size) {
  Matrix m(std::move(field), size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = Field::one();
  return m;
}

bool Matrix::is_zero() const {
  for (auto e : data_)
    if (e.value != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& other) const {
  return *field_ == *other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         data_ == other.data_;
}

RowReduction row_reduce(const Matrix& m) {
  const Field& f = m.field();
  Matrix work = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && work(pivot, c).value == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(work(r, j), work(pivot, j));
    }
    const Elem scale = f.inv(work(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) work(r, j) = f.mul(work(r, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || work(i, c).value == 0) continue;
      const Elem factor = f.neg(work(i, c));
      for (std::size_t j = c; j < m.cols(); ++j) {
        work(i, j) = f.add(work(i, j), f.mul(factor, work(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix basis(m.field_ptr(), r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = work(i, j);
  return RowReduction{r, std::move(basis), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank; }

Matrix dual_generator(const Matrix& g) {
  const RowReduction red = row_reduce(g);
  if (red.rank != g.rows()) {
    throw Error(ErrorCode::RankDeficient, "dual generator needs a full-row-rank matrix");
  }
  const Field& f = g.field();
  const std::size_t n = g.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : red.pivots) is_pivot[c] = true;

  Matrix h(g.field_ptr(), n - red.rank, n);
  std::size_t row = 0;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    h(row, free_col) = Field::one();
    for (std::size_t i = 0; i < red.rank; ++i) {
      h(row, red.pivots[i]) = f.neg(red.basis(i, free_col));
    }
    ++row;
  }
  return h;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) throw Error(ErrorCode::LengthMismatch, "inner dimensions differ");
  const Field& f = a.field();
  Matrix out(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Elem x = a(i, l);
      if (x.value == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.field_ptr(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Vector vec_mat(const Vector& x, const Matrix& g) {
  require_same_field(x.field(), g.field());
  if (x.size() != g.rows()) {
    throw Error(ErrorCode::LengthMismatch, "message length " + std::to_string(x.size()) +
                                               " != " + std::to_string(g.rows()) + " rows");
  }
  const Field& f = g.field();
  Vector out(g.field_ptr(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (x[i].value == 0) continue;
    for (std::size_t j = 0; j < g.cols(); ++j) out[j] = f.add(out[j], f.mul(x[i], g(i, j)));
  }
  return out;
}

}  // namespace wtspec::algebra
