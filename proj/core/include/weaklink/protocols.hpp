#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weaklink {

enum class Layer { wlan, access_control, authentication };

/// "wlan", "access-control", "authentication".
std::string_view to_string(Layer layer) noexcept;
std::optional<Layer> parse_layer(std::string_view text);

/// Descriptive entry for one protocol of the 802.11 security stack. Only wlan
/// ciphers carry key sizes; access-control and authentication protocols are
/// documented but never quantified.
struct ProtocolInfo {
  std::string name;
  std::vector<std::string> aliases;
  Layer layer;
  std::vector<std::int64_t> effective_key_bits;
  std::string notes;

  bool has_key_bits() const noexcept { return !effective_key_bits.empty(); }
  bool supports_bits(std::int64_t bits) const noexcept;
};

std::span<const ProtocolInfo> protocol_registry();

/// Case-insensitive match on name or alias.
std::optional<ProtocolInfo> find_protocol(std::string_view name);

}  // namespace weaklink
