#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "weaklink/big.hpp"
#include "weaklink/charset.hpp"

namespace weaklink {

/// Candidate-testing throughput of the attacker.
class AttackModel {
 public:
  /// Throws InvalidSpec when rate < 1.
  explicit AttackModel(BigCount rate_keys_per_second, std::string description = {});

  /// 10,000 ASICs at 100 MHz: 10^12 keys per second.
  static AttackModel asic_farm();

  const BigCount& rate() const noexcept { return rate_; }
  const std::string& description() const noexcept { return description_; }

 private:
  BigCount rate_;
  std::string description_;
};

/// Crack-time threshold above which a component counts as secure.
/// Years are 365 days of 86,400 s.
class LifetimeBudget {
 public:
  static constexpr std::uint64_t kSecondsPerYear = 365ULL * 86400ULL;

  /// Throws InvalidSpec when years is negative.
  explicit LifetimeBudget(BigRational years);

  /// Decimal text such as "89.78".
  static LifetimeBudget from_decimal(std::string_view years);

  /// 89.78 years, the highest national life expectancy at birth.
  static LifetimeBudget life_expectancy();

  const BigRational& years() const noexcept { return years_; }
  ExactSeconds seconds() const;

 private:
  BigRational years_;
};

struct PassphrasePolicy {
  /// Throws InvalidSpec when length < 1.
  PassphrasePolicy(CharacterSet charset, std::int64_t length);

  CharacterSet charset;
  std::int64_t length;
};

struct CipherSpec {
  /// Arbitrary positive key size. Throws InvalidSpec when bits < 1.
  CipherSpec(std::string protocol_label, std::int64_t effective_key_bits);

  /// Key size restricted to the values the protocol registry lists for
  /// `protocol` (WEP: 40/104, WPA and WPA2: 256).
  static CipherSpec named(std::string_view protocol, std::int64_t effective_key_bits);

  std::string protocol_label;
  std::int64_t effective_key_bits;
};

enum class Verdict { insecure, secure };

constexpr const char* to_string(Verdict v) noexcept {
  return v == Verdict::secure ? "secure" : "insecure";
}

/// 2^bits.
BigCount cipher_keyspace(std::int64_t bits);

/// set_size^length.
BigCount passphrase_keyspace(std::int64_t set_size, std::int64_t length);

inline BigCount passphrase_keyspace(const PassphrasePolicy& policy) {
  return passphrase_keyspace(policy.charset.size(), policy.length);
}

/// A passphrase space larger than the cipher's key space buys nothing:
/// min(passphrase_ks, cipher_ks), or passphrase_ks when no cipher bounds it.
BigCount effective_keyspace(const BigCount& passphrase_ks,
                            const std::optional<BigCount>& cipher_ks);

/// Worst-case exhaustive search time, keyspace / rate.
ExactSeconds crack_duration(const BigCount& keyspace, const AttackModel& attack);

/// Secure iff the duration is strictly longer than the budget.
Verdict is_secure(const ExactSeconds& duration, const LifetimeBudget& budget);

/// Real `length`-th root of (budget seconds * rate): the alphabet size at which
/// a random passphrase of that length exactly exhausts the budget.
Real min_charset_size(std::int64_t length, const LifetimeBudget& budget,
                      const AttackModel& attack);

/// Smallest integer s >= 1 with s^length / rate > budget seconds, found by
/// exact integer search.
BigCount exact_min_charset_size(std::int64_t length, const LifetimeBudget& budget,
                                const AttackModel& attack);

}  // namespace weaklink
