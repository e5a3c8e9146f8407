#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace bioeco {

// Calendar day. Parsed from and formatted as ISO-8601 (YYYY-MM-DD).
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    static std::optional<Date> parse(std::string_view iso);
    std::string str() const;

    auto operator<=>(const Date&) const = default;
};

}  // namespace bioeco
