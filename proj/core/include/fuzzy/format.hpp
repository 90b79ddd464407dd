#ifndef FUZZY_FORMAT_HPP
#define FUZZY_FORMAT_HPP

#include <string>
#include <string_view>

namespace fuzzy {

/// Shortest decimal (non-exponent) text that parses back to the same double.
std::string format_number(double value);

/// format_number for diagnostics: non-finite values print as nan, inf or -inf.
std::string describe_number(double value);

/// Parses a decimal or scientific literal; surrounding blanks are ignored.
/// Throws DataError on anything else, including trailing garbage.
double parse_number(std::string_view text);

}  // namespace fuzzy

#endif  // FUZZY_FORMAT_HPP
