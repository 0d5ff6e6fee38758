#include "wtspec/cli/suites.hpp"

#include "wtspec/algebra/random.hpp"
#include "wtspec/codes/reed_solomon.hpp"
#include "wtspec/codes/spectrum.hpp"
#include "wtspec/error.hpp"

namespace wtspec::cli {

std::vector<MdsCase> mds_exactness(const std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>>& params) {
  std::vector<MdsCase> out;
  for (const auto& [n, k, q] : params) {
    std::uint32_t p = 0, m = 0;
    if (!algebra::prime_power(q, &p, &m)) throw Error(ErrorCode::InvalidArgument, "q must be a prime power");
    const auto code = codes::reed_solomon(algebra::Field::create(p, m), n, k);
    MdsCase c{n, k, q, codes::spectrum_direct(code), enumerators::mds_spectrum(n, k, q)};
    c.is_mds = codes::is_mds(code);
    c.equal = c.enumerated.counts == c.formula.lambda;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<OracleCase> oracle_equivalence(std::uint64_t count, std::uint64_t seed, std::size_t n_max,
                                           const std::vector<std::uint32_t>& fields) {
  if (fields.empty() || n_max < 1) throw Error(ErrorCode::InvalidArgument, "empty oracle sweep");
  std::vector<OracleCase> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    algebra::SeedStream stream(algebra::derive_seed(seed, i));
    OracleCase c;
    c.index = i;
    c.q = fields[stream.uniform(static_cast<std::uint32_t>(fields.size()))];
    c.n = 1 + stream.uniform(static_cast<std::uint32_t>(n_max));
    c.k = 1 + stream.uniform(static_cast<std::uint32_t>(c.n));
    std::uint32_t p = 0, m = 0;
    algebra::prime_power(c.q, &p, &m);
    const auto field = algebra::Field::create(p, m);
    // Redraw from the same stream until the generator has full rank.
    for (;;) {
      codes::LinearCode code(algebra::random_matrix(field, c.k, c.n, stream));
      if (!code.full_rank()) continue;
      c.equal = codes::spectrum_direct(code) == codes::spectrum_dual(code);
      break;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace wtspec::cli
