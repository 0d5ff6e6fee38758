#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "wtspec/codes/code.hpp"
#include "wtspec/enumerators/enumerators.hpp"
#include "wtspec/ensemble/ensemble.hpp"
#include "wtspec/ensemble/independence.hpp"

// JSON output keeps insertion order and writes every big integer or rational
// as a decimal string ("a/b" for non-integral rationals).
namespace wtspec::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSummarySchema = 1;

Json to_json(const codes::WeightSpectrum& spec);
Json to_json(const enumerators::MdsSpectrum& mds);
Json to_json(const enumerators::ExpectedSpectrum& expected);
Json to_json(const enumerators::Thresholds& th);
Json to_json(const enumerators::BoundsSweepReport& report);
Json to_json(const ensemble::IndependenceReport& report);
Json to_json(const ensemble::EnsembleSummary& summary);

/// `w,count` rows after a header line.
void write_spectrum_csv(std::ostream& out, const codes::WeightSpectrum& spec);

/// Header idx,seed,rank,full_rank,a1,a2,dmin,N_1..N_n; unevaluated fields are NA.
void write_records_csv(std::ostream& out, const std::vector<ensemble::SampleRecord>& records, std::size_t n);

/// Fixed-width text table; columns are right-aligned to their widest cell.
void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows);

/// Decimal approximation of a rational, for human-facing tables.
std::string approx(const ExactRational& r, int digits = 6);

}  // namespace wtspec::io
