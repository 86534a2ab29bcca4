#include "weaklink/keyspace.hpp"

#include <utility>

#include "weaklink/error.hpp"
#include "weaklink/protocols.hpp"

namespace weaklink {

AttackModel::AttackModel(BigCount rate_keys_per_second, std::string description)
    : rate_(std::move(rate_keys_per_second)), description_(std::move(description)) {
  if (rate_.is_zero()) throw InvalidSpec("attack rate must be at least 1 key per second");
}

AttackModel AttackModel::asic_farm() {
  return AttackModel(BigCount::pow(10, 12),
                     "10,000 ASIC chips at 100 MHz, 100M keys/s each (10^12 keys/s)");
}

LifetimeBudget::LifetimeBudget(BigRational years) : years_(std::move(years)) {
  if (years_.sign() < 0) throw InvalidSpec("lifetime budget must be non-negative");
}

LifetimeBudget LifetimeBudget::from_decimal(std::string_view years) {
  return LifetimeBudget(parse_decimal(years));
}

LifetimeBudget LifetimeBudget::life_expectancy() { return LifetimeBudget(BigRational(8978, 100)); }

ExactSeconds LifetimeBudget::seconds() const {
  return ExactSeconds(BigRational(years_ * kSecondsPerYear));
}

PassphrasePolicy::PassphrasePolicy(CharacterSet cs, std::int64_t len)
    : charset(std::move(cs)), length(len) {
  if (length < 1) throw InvalidSpec("passphrase length must be at least 1");
}

CipherSpec::CipherSpec(std::string label, std::int64_t bits)
    : protocol_label(std::move(label)), effective_key_bits(bits) {
  if (effective_key_bits < 1) {
    throw InvalidSpec("cipher '" + protocol_label + "' needs at least 1 effective key bit");
  }
}

CipherSpec CipherSpec::named(std::string_view protocol, std::int64_t bits) {
  const auto info = find_protocol(protocol);
  if (!info) throw InvalidSpec("unknown protocol '" + std::string(protocol) + "'");
  if (!info->has_key_bits()) {
    throw InvalidSpec("protocol '" + info->name + "' has no cipher key to assess");
  }
  if (!info->supports_bits(bits)) {
    throw InvalidSpec(info->name + " does not use " + std::to_string(bits) + "-bit keys");
  }
  return CipherSpec(info->name, bits);
}

BigCount cipher_keyspace(std::int64_t bits) {
  if (bits < 1) throw InvalidSpec("cipher key must have at least 1 bit");
  return BigCount(BigInt(BigInt(1) << static_cast<unsigned>(bits)));
}

BigCount passphrase_keyspace(std::int64_t set_size, std::int64_t length) {
  if (set_size < 1) throw InvalidSpec("character set size must be at least 1");
  if (length < 1) throw InvalidSpec("passphrase length must be at least 1");
  return BigCount::pow(BigCount(static_cast<std::uint64_t>(set_size)),
                       static_cast<std::uint64_t>(length));
}

BigCount effective_keyspace(const BigCount& passphrase_ks, const std::optional<BigCount>& cipher_ks) {
  if (passphrase_ks.is_zero()) throw InvalidSpec("passphrase keyspace must be at least 1");
  if (!cipher_ks) return passphrase_ks;
  if (cipher_ks->is_zero()) throw InvalidSpec("cipher keyspace must be at least 1");
  return *cipher_ks < passphrase_ks ? *cipher_ks : passphrase_ks;
}

ExactSeconds crack_duration(const BigCount& keyspace, const AttackModel& attack) {
  return ExactSeconds(keyspace.value(), attack.rate().value());
}

Verdict is_secure(const ExactSeconds& duration, const LifetimeBudget& budget) {
  return duration > budget.seconds() ? Verdict::secure : Verdict::insecure;
}

Real min_charset_size(std::int64_t length, const LifetimeBudget& budget, const AttackModel& attack) {
  if (length < 1) throw InvalidSpec("passphrase length must be at least 1");
  if (budget.years().is_zero()) throw InvalidSpec("lifetime budget must be positive");
  const Real radicand = budget.seconds().to_real() * Real(attack.rate().value());
  if (length == 1) return radicand;
  return boost::multiprecision::exp(boost::multiprecision::log(radicand) / Real(length));
}

BigCount exact_min_charset_size(std::int64_t length, const LifetimeBudget& budget,
                                const AttackModel& attack) {
  if (length < 1) throw InvalidSpec("passphrase length must be at least 1");
  const ExactSeconds limit = budget.seconds();
  // s^L / rate > num / den  <=>  s^L * den > num * rate
  const BigInt target = limit.numerator() * attack.rate().value();
  const BigInt den = limit.denominator();
  const auto clears = [&](const BigInt& s) {
    return BigCount::pow(BigCount(s), static_cast<std::uint64_t>(length)).value() * den > target;
  };
  if (clears(1)) return BigCount(1);

  // Invariant: !clears(lo) && clears(hi).
  BigInt lo = 1;
  BigInt hi = 2;
  while (!clears(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (clears(mid)) {
      hi = std::move(mid);
    } else {
      lo = std::move(mid);
    }
  }
  return BigCount(std::move(hi));
}

}  // namespace weaklink
