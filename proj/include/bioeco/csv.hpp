#pragma once

#include <istream>
#include <string>
#include <vector>

namespace bioeco {

// Splits one CSV line on commas. Fields in this toolkit never contain
// commas or quotes, so no quoting rules apply. A trailing '\r' from
// CRLF input is stripped before splitting.
std::vector<std::string> split_csv_line(const std::string& line);

// Reads the next line, returning false at end of stream.
bool read_csv_line(std::istream& in, std::string& line);

// Locale-independent formatting for doubles (always '.' as the decimal
// separator). fmt_fixed pins the fraction digits; fmt_general uses up
// to `precision` significant digits.
std::string fmt_fixed(double value, int places);
std::string fmt_general(double value, int precision = 9);

}  // namespace bioeco
