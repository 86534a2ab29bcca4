#include "weaklink/tables.hpp"

namespace weaklink {

namespace {

struct LengthRow {
  std::int64_t bits;
  const char* label;
  std::int64_t length;
};

// Passphrase lengths typical for each cipher: 5 chars for 40-bit WEP, 13 for
// 104-bit WEP, 8..63 for WPA/WPA2-PSK.
constexpr LengthRow kLengthRows[] = {
    {40, "40-bits WEP", 5},
    {256, "256-bits WPA/WPA2 PSK", 8},
    {104, "104-bits WEP", 13},
    {256, "256-bits WPA/WPA2 PSK", 16},
    {256, "256-bits WPA/WPA2 PSK", 32},
    {256, "256-bits WPA/WPA2 PSK", 63},
};

}  // namespace

std::vector<CipherStrengthRow> cipher_strength_table(const AttackModel& attack) {
  std::vector<CipherStrengthRow> rows;
  for (const auto& [bits, found_in] : {std::pair<std::int64_t, const char*>{40, "WEP"},
                                       {104, "WEP"},
                                       {256, "WPA / WPA2"}}) {
    BigCount ks = cipher_keyspace(bits);
    ExactSeconds d = crack_duration(ks, attack);
    rows.push_back({bits, found_in, std::move(ks), std::move(d)});
  }
  return rows;
}

std::vector<std::int64_t> passphrase_table_set_sizes() { return {10, 26, 36, 52, 62}; }

std::vector<PassphraseStrengthRow> passphrase_strength_table(const AttackModel& attack) {
  std::vector<PassphraseStrengthRow> rows;
  const auto build = [&](const LengthRow& spec, RowVariant variant) {
    PassphraseStrengthRow row{spec.bits, spec.label, spec.length, variant, {}};
    const BigCount cipher_ks = cipher_keyspace(spec.bits);
    for (std::int64_t size : passphrase_table_set_sizes()) {
      const BigCount raw = passphrase_keyspace(size, spec.length);
      // Only the practical row applies the cipher cap; the others show the raw
      // passphrase space.
      BigCount ks = variant == RowVariant::practical ? effective_keyspace(raw, cipher_ks) : raw;
      ExactSeconds d = crack_duration(ks, attack);
      row.cells.push_back({size, std::move(ks), std::move(d), cipher_ks < raw});
    }
    rows.push_back(std::move(row));
  };
  for (const auto& spec : kLengthRows) {
    if (spec.length == 63) {
      build(spec, RowVariant::calculated);
      build(spec, RowVariant::practical);
    } else {
      build(spec, RowVariant::plain);
    }
  }
  return rows;
}

std::vector<MinCharsetRow> min_charset_table(const LifetimeBudget& budget, const AttackModel& attack) {
  std::vector<MinCharsetRow> rows;
  for (const auto& spec : kLengthRows) {
    rows.push_back({spec.bits, spec.label, spec.length, min_charset_size(spec.length, budget, attack),
                    exact_min_charset_size(spec.length, budget, attack)});
  }
  return rows;
}

}  // namespace weaklink
