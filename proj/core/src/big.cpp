#include "weaklink/big.hpp"

#include <algorithm>
#include <cctype>
#include <ios>

#include "weaklink/error.hpp"

namespace weaklink {

BigCount::BigCount(BigInt v) : value_(std::move(v)) {
  if (value_.sign() < 0) throw InvalidSpec("count must be non-negative, got " + value_.str());
}

BigCount BigCount::parse(std::string_view decimal) {
  if (decimal.empty()) throw InvalidSpec("empty integer");
  for (char c : decimal) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidSpec("not an unsigned integer: '" + std::string(decimal) + "'");
    }
  }
  return BigCount(BigInt(std::string(decimal)));
}

BigCount BigCount::pow(const BigCount& base, std::uint64_t exponent) {
  // Square-and-multiply over the full exponent range; boost's pow() takes an
  // unsigned int.
  BigInt result = 1;
  BigInt b = base.value_;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return BigCount(std::move(result));
}

double BigCount::to_double() const { return value_.convert_to<double>(); }

ExactSeconds::ExactSeconds(BigInt numerator, BigInt denominator) {
  if (denominator.sign() <= 0) throw InvalidSpec("duration denominator must be positive");
  if (numerator.sign() < 0) throw InvalidSpec("duration must be non-negative");
  value_ = BigRational(numerator, denominator);
}

ExactSeconds::ExactSeconds(BigRational value) : value_(std::move(value)) {
  if (value_.sign() < 0) throw InvalidSpec("duration must be non-negative");
}

Real ExactSeconds::to_real() const { return Real(numerator()) / Real(denominator()); }

BigRational parse_decimal(std::string_view text) {
  const auto bad = [&] { return InvalidSpec("not a non-negative decimal: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();

  BigInt mantissa = 0;
  BigInt scale = 1;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) throw bad();
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) scale *= 10;
      seen_digit = true;
    } else {
      throw bad();
    }
  }
  if (!seen_digit) throw bad();
  return BigRational(mantissa, scale);
}

std::string to_exact_string(const BigRational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  // Terminating iff the reduced denominator is 2^a * 5^b.
  unsigned twos = 0;
  unsigned fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return num.str() + "/" + boost::multiprecision::denominator(value).str();

  const unsigned places = std::max(twos, fives);
  const BigInt scaled = num * boost::multiprecision::pow(BigInt(10), places) /
                        boost::multiprecision::denominator(value);
  std::string digits = BigInt(boost::multiprecision::abs(scaled)).str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return (scaled.sign() < 0 ? "-" : "") + digits;
}

std::string to_significant(const Real& value, int digits) {
  return value.str(digits, std::ios_base::fmtflags{});
}

}  // namespace weaklink
