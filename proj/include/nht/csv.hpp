#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "nht/correlation.hpp"
#include "nht/search.hpp"

namespace nht {

/// Header `lag,raw_sum,residue,normalized`; normalized has 6 decimals, rounded half-up.
void emit_correlation_csv(const CorrelationSeries& series, std::ostream& out);

/// Header `i,j,modulus,expectation`; expectation rounded half-up to 2 decimals.
void emit_pair_table_csv(std::span<const PairTableRow> rows, std::ostream& out);

/// convention,i,j,modulus,target,expectation,rational,deviation
void emit_deviation_csv(const DeviationProfile& profile, std::ostream& out);

void emit_search_csv(std::span<const SearchCandidate> candidates, std::ostream& out);

/// Minimal SVG stem plot of the residue column.
void emit_stem_svg(const CorrelationSeries& series, const std::string& title, std::ostream& out);

/// Exact decimal rendering of num/den with `digits` decimals, rounded half-up.
std::string format_fixed(Int num, Int den, int digits);

/// Writes to a sibling temporary file and renames it over `path`.
/// Throws Error when the file cannot be written.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace nht
