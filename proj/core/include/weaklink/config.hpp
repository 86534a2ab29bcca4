#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weaklink/big.hpp"
#include "weaklink/charset.hpp"
#include "weaklink/protocols.hpp"
#include "weaklink/stack.hpp"

namespace weaklink {

struct DescriptiveEntry {
  Layer layer;
  std::string protocol_name;
};

/// Resolved audit input. Every name has been checked against the registries
/// by the time a value of this type exists.
struct AuditConfig {
  std::string wlan_protocol;
  std::optional<std::int64_t> effective_key_bits;
  std::optional<std::int64_t> passphrase_length;
  CharacterSet passphrase_charset = *find_charset("alphanumeric");
  BigCount attack_rate_keys_per_second = BigCount::pow(10, 12);
  BigRational lifetime_budget_years = BigRational(8978, 100);
  std::vector<DescriptiveEntry> descriptive_components;
};

/// Parses the line-oriented config format:
///
///   # comment
///   wlan_protocol = WPA2
///   passphrase_length = 8
///   passphrase_charset = alphanumeric      # or an explicit size, e.g. 36
///   effective_key_bits = 256               # optional, must be listed for the protocol
///   attack_rate_keys_per_second = 1000000000000
///   lifetime_budget_years = 89.78
///   descriptive_component = access-control:802.1X
///
/// Keys are case-insensitive; `descriptive_component` may repeat, every other
/// key may appear once. wlan_protocol is required; passphrase_charset defaults
/// to alphanumeric and is only used together with passphrase_length. Throws
/// ConfigError carrying the line number.
AuditConfig parse_config(std::string_view text);

/// Registry name or a positive integer size (size-only set named "custom-N").
/// Throws UsageError naming the token.
CharacterSet resolve_charset(std::string_view token);

/// Cipher (from the protocol and key bits), optional governed passphrase and
/// descriptive components, in that order.
SecurityStack build_stack(const AuditConfig& config);

}  // namespace weaklink
