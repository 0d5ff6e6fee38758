#pragma once

#include <cstddef>
#include <cstdint>
#include <tuple>
#include <vector>

#include "wtspec/codes/code.hpp"
#include "wtspec/enumerators/enumerators.hpp"

// Verification suites shared by `wtspec verify` and the acceptance runner.
namespace wtspec::cli {

struct MdsCase {
  std::size_t n, k;
  std::uint32_t q;
  codes::WeightSpectrum enumerated;  // exhaustive Reed-Solomon spectrum
  enumerators::MdsSpectrum formula;
  bool is_mds = false;
  bool equal = false;
};

/// Reed-Solomon enumeration against the closed-form MDS spectrum.
std::vector<MdsCase> mds_exactness(const std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>>& params);

struct OracleCase {
  std::uint64_t index = 0;
  std::size_t n = 0, k = 0;
  std::uint32_t q = 0;
  bool equal = false;
};

/// `count` seeded random full-rank codes with n <= n_max and q drawn from
/// `fields`; direct enumeration must equal dual enumeration + MacWilliams.
std::vector<OracleCase> oracle_equivalence(std::uint64_t count, std::uint64_t seed, std::size_t n_max,
                                           const std::vector<std::uint32_t>& fields);

}  // namespace wtspec::cli
