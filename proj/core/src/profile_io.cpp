#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fuzzy/errors.hpp"
#include "fuzzy/format.hpp"
#include "fuzzy/io.hpp"

namespace fuzzy {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

std::vector<double> json_numbers(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw DataError(std::string("profile JSON: missing array '") + key + "'");
  }
  std::vector<double> out;
  out.reserve(doc[key].size());
  for (const auto& v : doc[key]) {
    if (!v.is_number()) throw DataError(std::string("profile JSON: non-number in '") + key + "'");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string write_profile_csv(const AlphaProfile& profile) {
  std::string out = "alpha,lo,hi\n";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    out += format_number(profile.grid()[i]);
    out += ',';
    out += format_number(profile.lo()[i]);
    out += ',';
    out += format_number(profile.hi()[i]);
    out += '\n';
  }
  return out;
}

AlphaProfile parse_profile_csv(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && is_blank(lines[i])) ++i;
  if (i == lines.size()) throw DataError("profile CSV: empty input");
  if (trim(lines[i]) != "alpha,lo,hi") {
    throw DataError("profile CSV: expected header 'alpha,lo,hi'");
  }
  std::vector<double> levels;
  std::vector<double> lo;
  std::vector<double> hi;
  for (++i; i < lines.size(); ++i) {
    if (is_blank(lines[i])) continue;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 3) {
      throw DataError("profile CSV: line " + std::to_string(i + 1) + " needs 3 fields");
    }
    levels.push_back(parse_number(fields[0]));
    lo.push_back(parse_number(fields[1]));
    hi.push_back(parse_number(fields[2]));
  }
  if (std::count(levels.begin(), levels.end(), 1.0) != 1) {
    throw DataError("profile CSV: exactly one row with alpha = 1 required");
  }
  return AlphaProfile::from_cuts(AlphaGrid::from_levels(std::move(levels)), std::move(lo),
                                 std::move(hi));
}

std::string write_profile_json(const AlphaProfile& profile) {
  nlohmann::ordered_json doc;
  doc["grid"] = std::vector<double>(profile.grid().levels().begin(), profile.grid().levels().end());
  doc["lo"] = std::vector<double>(profile.lo().begin(), profile.lo().end());
  doc["hi"] = std::vector<double>(profile.hi().begin(), profile.hi().end());
  return doc.dump() + "\n";
}

AlphaProfile parse_profile_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("profile JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DataError("profile JSON: expected an object");
  return AlphaProfile::from_cuts(AlphaGrid::from_levels(json_numbers(doc, "grid")),
                                 json_numbers(doc, "lo"), json_numbers(doc, "hi"));
}

AlphaProfile read_profile(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  if (path.extension() == ".json") return parse_profile_json(text);
  return parse_profile_csv(text);
}

void write_profile(const std::filesystem::path& path, const AlphaProfile& profile) {
  write_text_file(path, path.extension() == ".json" ? write_profile_json(profile)
                                                    : write_profile_csv(profile));
}

std::vector<double> parse_sample_text(std::string_view text) {
  std::vector<std::string_view> rows;
  for (std::string_view line : split_lines(text)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw DataError("sample: no observations");

  std::vector<double> values;
  // A first row containing a non-numeric field is a CSV header.
  const auto header = split_fields(rows.front());
  bool has_header = false;
  for (auto f : header) {
    try {
      parse_number(f);
    } catch (const DataError&) {
      has_header = true;
    }
  }
  if (!has_header) {
    if (header.size() != 1) {
      throw DataError("sample: CSV input needs a header with an 'x' column");
    }
    for (auto row : rows) values.push_back(parse_number(row));
    return values;
  }

  std::size_t column = header.size();
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (trim(header[c]) == "x") column = c;
  }
  if (column == header.size()) throw DataError("sample: CSV header has no 'x' column");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto fields = split_fields(rows[r]);
    if (fields.size() != header.size()) {
      throw DataError("sample: row " + std::to_string(r + 1) + " has the wrong field count");
    }
    values.push_back(parse_number(fields[column]));
  }
  if (values.empty()) throw DataError("sample: no observations");
  return values;
}

QuantileTable parse_quantile_table_csv(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && is_blank(lines[i])) ++i;
  if (i == lines.size()) throw DataError("quantile table: empty input");
  if (trim(lines[i]) != "p,x") throw DataError("quantile table: expected header 'p,x'");
  std::vector<double> p;
  std::vector<double> x;
  for (++i; i < lines.size(); ++i) {
    if (is_blank(lines[i])) continue;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 2) {
      throw DataError("quantile table: line " + std::to_string(i + 1) + " needs 2 fields");
    }
    p.push_back(parse_number(fields[0]));
    x.push_back(parse_number(fields[1]));
  }
  return QuantileTable(std::move(p), std::move(x));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw DataError("write failed for '" + path.string() + "'");
}

}  // namespace fuzzy
