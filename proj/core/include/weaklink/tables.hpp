#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weaklink/big.hpp"
#include "weaklink/keyspace.hpp"

namespace weaklink {

// Regenerated from the keyspace operations on every call.

struct CipherStrengthRow {
  std::int64_t bits;
  std::string found_in;
  BigCount keyspace;
  ExactSeconds duration;
};

/// 40-bit WEP, 104-bit WEP, 256-bit WPA/WPA2.
std::vector<CipherStrengthRow> cipher_strength_table(const AttackModel& attack);

struct PassphraseCell {
  std::int64_t set_size;
  BigCount keyspace;
  ExactSeconds duration;
  bool exceeds_cipher = false;  // passphrase space larger than 2^bits
};

enum class RowVariant { plain, calculated, practical };

struct PassphraseStrengthRow {
  std::int64_t cipher_bits;
  std::string cipher_label;
  std::int64_t length;
  RowVariant variant;
  std::vector<PassphraseCell> cells;
};

/// Set sizes 10/26/36/52/62 against lengths 5, 8, 13, 16, 32 and 63; the 63
/// row appears twice, uncapped ("calculated") and capped at 2^256
/// ("practical").
std::vector<PassphraseStrengthRow> passphrase_strength_table(const AttackModel& attack);
std::vector<std::int64_t> passphrase_table_set_sizes();

struct MinCharsetRow {
  std::int64_t cipher_bits;
  std::string cipher_label;
  std::int64_t length;
  Real minimum;
  BigCount integer_ceiling;
};

std::vector<MinCharsetRow> min_charset_table(const LifetimeBudget& budget,
                                             const AttackModel& attack);

}  // namespace weaklink
