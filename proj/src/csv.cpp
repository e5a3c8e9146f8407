#include "bioeco/csv.hpp"

#include <charconv>
#include <cmath>

namespace bioeco {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::string trimmed = line;
    if (!trimmed.empty() && trimmed.back() == '\r') {
        trimmed.pop_back();
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = trimmed.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trimmed.substr(start));
            break;
        }
        fields.push_back(trimmed.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

bool read_csv_line(std::istream& in, std::string& line) {
    return static_cast<bool>(std::getline(in, line));
}

namespace {

std::string to_chars_str(double value, std::chars_format fmt, int precision) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, fmt, precision);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string fmt_fixed(double value, int places) {
    return to_chars_str(value, std::chars_format::fixed, places);
}

std::string fmt_general(double value, int precision) {
    return to_chars_str(value, std::chars_format::general, precision);
}

}  // namespace bioeco
