#ifndef FUZZY_IO_HPP
#define FUZZY_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzy/profile.hpp"

namespace fuzzy {

// Profile CSV: header `alpha,lo,hi`, one row per grid level in ascending
// order, last row at alpha = 1. Numbers are written as the shortest decimal
// text that round-trips, so write(parse(text)) == text for any text this
// module produced.
std::string write_profile_csv(const AlphaProfile& profile);
AlphaProfile parse_profile_csv(std::string_view text);

// Profile JSON: {"grid": [...], "lo": [...], "hi": [...]}.
std::string write_profile_json(const AlphaProfile& profile);
AlphaProfile parse_profile_json(std::string_view text);

// Dispatch on extension: ".json" is JSON, everything else CSV.
AlphaProfile read_profile(const std::filesystem::path& path);
void write_profile(const std::filesystem::path& path, const AlphaProfile& profile);

/// Observations from plain text (one number per line) or from a CSV whose
/// header has a column named `x`. Blank lines and lines starting with '#'
/// are skipped. Throws DataError for malformed or empty input.
std::vector<double> parse_sample_text(std::string_view text);

/// Quantile table CSV with header `p,x`.
QuantileTable parse_quantile_table_csv(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace fuzzy

#endif  // FUZZY_IO_HPP
