#pragma once

#include <filesystem>
#include <iosfwd>

#include "wtspec/algebra/matrix.hpp"

// Plain-text generator matrices:
//   n k p m
//   c_0 c_1 ... c_m          (modulus, constant term first)
//   k rows of n element indices
namespace wtspec::io {

algebra::Matrix read_matrix_text(std::istream& in);
algebra::Matrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_text(std::ostream& out, const algebra::Matrix& g);
void write_matrix_file(const std::filesystem::path& path, const algebra::Matrix& g);

}  // namespace wtspec::io
