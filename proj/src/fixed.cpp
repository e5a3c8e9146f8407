#include "bioeco/fixed.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace bioeco {

Fixed Fixed::from_double(double value) {
    return from_raw(static_cast<std::int64_t>(std::llround(value * 1000.0)));
}

double Fixed::to_double() const {
    return static_cast<double>(raw_) / 1000.0;
}

std::optional<Fixed> Fixed::parse(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::int64_t whole = 0;
    std::size_t whole_digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        whole = whole * 10 + (text[pos] - '0');
        ++whole_digits;
        ++pos;
        if (whole_digits > 15) {
            return std::nullopt;  // out of range for exact arithmetic
        }
    }
    if (whole_digits == 0) {
        return std::nullopt;
    }
    std::int64_t frac = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t frac_digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            frac = frac * 10 + (text[pos] - '0');
            ++frac_digits;
            ++pos;
        }
        if (frac_digits == 0 || frac_digits > 3) {
            return std::nullopt;
        }
        while (frac_digits < 3) {
            frac *= 10;
            ++frac_digits;
        }
    }
    if (pos != text.size()) {
        return std::nullopt;
    }
    std::int64_t raw = whole * 1000 + frac;
    return from_raw(negative ? -raw : raw);
}

std::string Fixed::str() const {
    std::int64_t v = raw_;
    const char* sign = "";
    if (v < 0) {
        sign = "-";
        v = -v;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%s%lld.%03lld", sign, static_cast<long long>(v / 1000),
                  static_cast<long long>(v % 1000));
    return buf;
}

}  // namespace bioeco
