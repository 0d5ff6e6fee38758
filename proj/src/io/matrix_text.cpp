#include "wtspec/io/matrix_text.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "wtspec/error.hpp"

namespace wtspec::io {
namespace {

std::uint64_t read_number(std::istream& in, const char* what) {
  long long v = 0;
  if (!(in >> v)) throw Error(ErrorCode::ParseError, std::string("expected ") + what);
  if (v < 0) throw Error(ErrorCode::ParseError, std::string(what) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

algebra::Matrix read_matrix_text(std::istream& in) {
  const auto n = read_number(in, "n");
  const auto k = read_number(in, "k");
  const auto p = read_number(in, "p");
  const auto m = read_number(in, "m");
  if (n == 0 || k == 0) throw Error(ErrorCode::ParseError, "n and k must be >= 1");
  if (p > UINT32_MAX || m > 64) throw Error(ErrorCode::ParseError, "field parameters out of range");
  std::vector<std::uint32_t> modulus(m + 1);
  for (auto& c : modulus) c = static_cast<std::uint32_t>(read_number(in, "modulus coefficient"));

  algebra::FieldPtr field = algebra::Field::create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
  if (field->modulus() != modulus) field = algebra::Field::with_modulus(static_cast<std::uint32_t>(p), modulus);

  std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(n));
  for (auto& row : rows) {
    for (auto& e : row) {
      const auto v = read_number(in, "matrix entry");
      if (v >= field->q()) throw Error(ErrorCode::ElementOutOfRange, "entry " + std::to_string(v) + " >= q");
      e = static_cast<std::uint32_t>(v);
    }
  }
  std::string trailing;
  if (in >> trailing) throw Error(ErrorCode::ParseError, "unexpected trailing content '" + trailing + "'");
  return algebra::Matrix::from_rows(field, rows);
}

algebra::Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return read_matrix_text(in);
}

void write_matrix_text(std::ostream& out, const algebra::Matrix& g) {
  const auto& f = g.field();
  out << g.cols() << ' ' << g.rows() << ' ' << f.p() << ' ' << f.m() << '\n';
  for (std::size_t i = 0; i < f.modulus().size(); ++i) out << (i ? " " : "") << f.modulus()[i];
  out << '\n';
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? " " : "") << g(r, c).value;
    out << '\n';
  }
}

void write_matrix_file(const std::filesystem::path& path, const algebra::Matrix& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_matrix_text(out, g);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace wtspec::io
