#include "weaklink/format.hpp"

#include <array>
#include <charconv>
#include <optional>

#include "weaklink/error.hpp"

namespace weaklink {

namespace {

constexpr std::string_view kTimesTen = "×10^";
constexpr int kSignificantDigits = 9;

constexpr std::array kUnits{TimeUnit::nanoseconds, TimeUnit::microseconds, TimeUnit::milliseconds,
                            TimeUnit::seconds,     TimeUnit::minutes,      TimeUnit::hours,
                            TimeUnit::days,        TimeUnit::years};

BigInt pow10(unsigned n) { return boost::multiprecision::pow(BigInt(10), n); }

BigRational pow10_signed(int e) {
  return e >= 0 ? BigRational(pow10(static_cast<unsigned>(e)))
                : BigRational(BigInt(1), pow10(static_cast<unsigned>(-e)));
}

void strip_fraction_zeros(std::string& s) {
  if (s.find('.') == std::string::npos) return;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
}

std::string render_plain(const SignificantDigits& sd) {
  const std::string& d = sd.digits;
  const int n = static_cast<int>(d.size());
  std::string out;
  if (sd.exponent >= n - 1) {
    out = d + std::string(static_cast<std::size_t>(sd.exponent - (n - 1)), '0');
  } else if (sd.exponent >= 0) {
    out = d.substr(0, static_cast<std::size_t>(sd.exponent) + 1) + "." +
          d.substr(static_cast<std::size_t>(sd.exponent) + 1);
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-sd.exponent - 1), '0') + d;
  }
  strip_fraction_zeros(out);
  return out;
}

std::string render_scientific(const SignificantDigits& sd) {
  std::string mantissa = sd.digits.substr(0, 1);
  if (sd.digits.size() > 1) {
    mantissa += "." + sd.digits.substr(1);
    strip_fraction_zeros(mantissa);
  }
  return mantissa + std::string(kTimesTen) + std::to_string(sd.exponent);
}

}  // namespace

std::string_view to_string(TimeUnit unit) noexcept {
  switch (unit) {
    case TimeUnit::nanoseconds: return "nanoseconds";
    case TimeUnit::microseconds: return "microseconds";
    case TimeUnit::milliseconds: return "milliseconds";
    case TimeUnit::seconds: return "seconds";
    case TimeUnit::minutes: return "minutes";
    case TimeUnit::hours: return "hours";
    case TimeUnit::days: return "days";
    case TimeUnit::years: return "years";
  }
  return "?";
}

BigRational unit_seconds(TimeUnit unit) {
  switch (unit) {
    case TimeUnit::nanoseconds: return BigRational(1, 1'000'000'000);
    case TimeUnit::microseconds: return BigRational(1, 1'000'000);
    case TimeUnit::milliseconds: return BigRational(1, 1'000);
    case TimeUnit::seconds: return 1;
    case TimeUnit::minutes: return 60;
    case TimeUnit::hours: return 3600;
    case TimeUnit::days: return 86400;
    case TimeUnit::years: return 365 * 86400;
  }
  return 1;
}

std::string FormattedDuration::text() const {
  return value_text + " " + std::string(to_string(unit));
}

SignificantDigits round_significant(const BigRational& value, int digits) {
  if (value.sign() <= 0) throw InvalidSpec("round_significant needs a positive value");
  if (digits < 1) throw InvalidSpec("need at least one significant digit");

  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
  while (pow10_signed(e) > value) --e;
  while (pow10_signed(e + 1) <= value) ++e;

  const BigRational scaled = value * pow10_signed(digits - 1 - e);
  const BigInt sn = boost::multiprecision::numerator(scaled);
  const BigInt sd = boost::multiprecision::denominator(scaled);
  BigInt q = sn / sd;
  const BigInt twice_rem = 2 * (sn % sd);
  if (twice_rem > sd || (twice_rem == sd && q % 2 == 1)) ++q;
  if (q == pow10(static_cast<unsigned>(digits))) {
    q = pow10(static_cast<unsigned>(digits - 1));
    ++e;
  }
  return {q.str(), e};
}

FormattedDuration format_duration(const ExactSeconds& duration) {
  const BigRational& s = duration.value();
  if (s.is_zero()) return {"0", TimeUnit::nanoseconds};

  TimeUnit unit = TimeUnit::nanoseconds;
  for (TimeUnit u : kUnits) {
    if (s >= unit_seconds(u)) unit = u;
  }
  // Each band starts at one of its own unit.
  const BigRational in_unit = s / unit_seconds(unit);
  const SignificantDigits sd = round_significant(in_unit, kSignificantDigits);

  const bool scientific = (unit == TimeUnit::years && in_unit >= BigRational(pow10(9))) ||
                          (unit == TimeUnit::nanoseconds && in_unit < BigRational(1, 1000));
  return {scientific ? render_scientific(sd) : render_plain(sd), unit};
}

ExactSeconds parse_duration_text(std::string_view text) {
  const auto bad = [&] { return UsageError("malformed duration '" + std::string(text) + "'"); };
  const auto space = text.find(' ');
  if (space == std::string_view::npos) throw bad();
  std::string_view number = text.substr(0, space);
  const std::string_view unit_text = text.substr(space + 1);

  std::optional<TimeUnit> unit;
  for (TimeUnit u : kUnits) {
    if (unit_text == to_string(u)) unit = u;
  }
  if (!unit) throw bad();

  int exponent = 0;
  if (const auto pos = number.find(kTimesTen); pos != std::string_view::npos) {
    const std::string_view exp_text = number.substr(pos + kTimesTen.size());
    const auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size()) throw bad();
    number = number.substr(0, pos);
  }
  BigRational mantissa;
  try {
    mantissa = parse_decimal(number);
  } catch (const InvalidSpec&) {
    throw bad();
  }
  return ExactSeconds(BigRational(mantissa * pow10_signed(exponent) * unit_seconds(*unit)));
}

}  // namespace weaklink
