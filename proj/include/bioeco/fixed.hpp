#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bioeco {

// Fixed-point decimal with three fractional digits, stored as integer
// thousandths. Addition and subtraction are exact, so summing record
// masses or prices conserves totals bit for bit. Currency and biomass
// quantities throughout the toolkit use this type.
class Fixed {
  public:
    constexpr Fixed() = default;

    static constexpr Fixed from_raw(std::int64_t thousandths) {
        Fixed f;
        f.raw_ = thousandths;
        return f;
    }

    // Rounds half away from zero.
    static Fixed from_double(double value);

    // Accepts [sign] digits [ "." 1..3 digits ]. More than three decimal
    // places is rejected rather than rounded; the input is then malformed.
    static std::optional<Fixed> parse(std::string_view text);

    constexpr std::int64_t raw() const { return raw_; }
    double to_double() const;

    // Always three decimal places, e.g. "4.500", "-0.001".
    std::string str() const;

    constexpr Fixed operator+(Fixed other) const { return from_raw(raw_ + other.raw_); }
    constexpr Fixed operator-(Fixed other) const { return from_raw(raw_ - other.raw_); }
    constexpr Fixed operator-() const { return from_raw(-raw_); }
    Fixed& operator+=(Fixed other) {
        raw_ += other.raw_;
        return *this;
    }
    Fixed& operator-=(Fixed other) {
        raw_ -= other.raw_;
        return *this;
    }

    auto operator<=>(const Fixed&) const = default;

    constexpr bool is_zero() const { return raw_ == 0; }

  private:
    std::int64_t raw_ = 0;
};

}  // namespace bioeco
