#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace weaklink {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// 50 decimal digits; used only for the charset root and display.
using Real = boost::multiprecision::cpp_dec_float_50;

/// Non-negative arbitrary-precision count of candidate keys.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  /// Throws InvalidSpec if `v` is negative.
  explicit BigCount(BigInt v);

  /// Parses an unsigned decimal integer; throws InvalidSpec on anything else.
  static BigCount parse(std::string_view decimal);

  static BigCount pow(const BigCount& base, std::uint64_t exponent);

  const BigInt& value() const noexcept { return value_; }
  std::string to_string() const { return value_.str(); }
  bool is_zero() const { return value_.is_zero(); }

  /// Nearest double; +inf beyond the double range.
  double to_double() const;

  friend BigCount operator*(const BigCount& a, const BigCount& b) {
    return BigCount(BigInt(a.value_ * b.value_));
  }
  friend BigCount operator+(const BigCount& a, const BigCount& b) {
    return BigCount(BigInt(a.value_ + b.value_));
  }
  friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  BigInt value_;
};

/// Exact non-negative duration in seconds, kept as a reduced fraction.
class ExactSeconds {
 public:
  ExactSeconds() = default;

  /// numerator / denominator seconds. Throws InvalidSpec when the denominator
  /// is not positive or the value is negative.
  ExactSeconds(BigInt numerator, BigInt denominator);
  explicit ExactSeconds(BigRational value);

  static ExactSeconds from_integer(const BigCount& seconds) {
    return ExactSeconds(BigRational(seconds.value()));
  }

  const BigRational& value() const noexcept { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  /// High-precision decimal approximation.
  Real to_real() const;
  double to_double() const { return static_cast<double>(to_real()); }

  friend ExactSeconds operator*(const ExactSeconds& a, const BigRational& k) {
    return ExactSeconds(BigRational(a.value_ * k));
  }
  friend ExactSeconds operator/(const ExactSeconds& a, const BigRational& k) {
    return ExactSeconds(BigRational(a.value_ / k));
  }
  friend bool operator==(const ExactSeconds& a, const ExactSeconds& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactSeconds& a, const ExactSeconds& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  BigRational value_;
};

/// Parses a plain non-negative decimal ("89.78", "100", "0.5") into an exact
/// rational. Exponents and signs are rejected with InvalidSpec.
BigRational parse_decimal(std::string_view text);

/// Exact decimal rendering of a rational when it terminates, otherwise
/// "numerator/denominator".
std::string to_exact_string(const BigRational& value);

/// Real -> decimal text with `digits` significant digits (general format).
std::string to_significant(const Real& value, int digits);

}  // namespace weaklink
