#pragma once

#include <string>
#include <string_view>

#include "weaklink/big.hpp"

namespace weaklink {

enum class TimeUnit { nanoseconds, microseconds, milliseconds, seconds, minutes, hours, days, years };

std::string_view to_string(TimeUnit unit) noexcept;

/// Exact length of one unit in seconds (years are 365 days).
BigRational unit_seconds(TimeUnit unit);

/// A duration rendered for people: 9 significant digits, rounded half-even.
struct FormattedDuration {
  std::string value_text;
  TimeUnit unit;

  /// "1.09951163 seconds", "1.51067952×10^9 years".
  std::string text() const;
};

/// Picks the largest unit that keeps the value >= 1 (nanoseconds below 1 us,
/// years from 365 days up). Years >= 10^9 and nanosecond values below 10^-3
/// use scientific notation; trailing fractional zeros are dropped.
FormattedDuration format_duration(const ExactSeconds& duration);

/// Inverse of FormattedDuration::text(): parses "<number> <unit>" back into
/// an exact value. Throws UsageError on malformed input.
ExactSeconds parse_duration_text(std::string_view text);

/// Rounds a positive rational to `digits` significant digits (half-even) and
/// returns (digit string without leading zeros, decimal exponent of the first
/// digit).
struct SignificantDigits {
  std::string digits;
  int exponent;
};
SignificantDigits round_significant(const BigRational& value, int digits);

}  // namespace weaklink
