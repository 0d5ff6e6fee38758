#pragma once

#include <cstdint>
#include <string_view>

#include "wtspec/codes/code.hpp"

namespace wtspec::codes {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

enum class Strategy { Auto, Direct, Dual };

Strategy parse_strategy(std::string_view name);
std::string_view to_string(Strategy s);

/// Spectrum of the row space of `basis`, whose rows must be linearly
/// independent. Enumerates one representative per projective point (leading
/// nonzero message coordinate equal to 1) and counts it q-1 times.
WeightSpectrum enumerate_row_space(const Matrix& basis, std::uint64_t cap = kDefaultEnumerationCap);

/// Requires q^rank <= cap, otherwise EnumerationTooLarge.
WeightSpectrum spectrum_direct(const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap);

/// Dual code enumeration followed by the MacWilliams transform. Requires a
/// full-rank generator and q^(n-k) <= cap.
WeightSpectrum spectrum_dual(const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap);

/// Auto: direct when q^rank <= q^(n-k) or the generator is rank deficient,
/// otherwise the dual path.
WeightSpectrum spectrum(const LinearCode& code, Strategy strategy,
                        std::uint64_t cap = kDefaultEnumerationCap);

/// Strategy actually taken by spectrum() for this code.
Strategy resolve_strategy(const LinearCode& code, Strategy strategy);

/// Spectrum of the dual of a dimension-`source_dim` linear code with the
/// given spectrum: A'_j = q^-dim * sum_w A_w K_j(w). Throws
/// NotALinearSpectrum when a division is inexact.
WeightSpectrum macwilliams_transform(const WeightSpectrum& spec, std::uint32_t q,
                                     std::size_t source_dim);

/// Krawtchouk polynomial K_j(w) for length n over GF(q).
BigInt krawtchouk(std::size_t n, std::uint32_t q, std::size_t j, std::size_t w);

/// Throws ZeroCode for rank 0.
std::size_t min_distance(const LinearCode& code, Strategy strategy = Strategy::Auto,
                         std::uint64_t cap = kDefaultEnumerationCap);

/// Throws RankDeficient unless rank == k.
bool is_mds(const LinearCode& code, Strategy strategy = Strategy::Auto,
            std::uint64_t cap = kDefaultEnumerationCap);

MessageWeightCounts message_counts_from_spectrum(const WeightSpectrum& spec, std::uint32_t q,
                                                 std::size_t k, std::size_t rank);

MessageWeightCounts message_weight_counts(const LinearCode& code, Strategy strategy = Strategy::Auto,
                                          std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace wtspec::codes
