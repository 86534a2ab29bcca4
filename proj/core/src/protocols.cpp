#include "weaklink/protocols.hpp"

#include <algorithm>
#include <cctype>

namespace weaklink {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  return std::ranges::equal(a, b, [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) ==
           std::tolower(static_cast<unsigned char>(y));
  });
}

const std::vector<ProtocolInfo>& registry() {
  static const std::vector<ProtocolInfo> table{
      {"WEP", {}, Layer::wlan, {40, 104},
       "RC4 stream cipher, 64/128-bit keys with a 24-bit IV; 40 or 104 effective bits"},
      {"WPA", {"WPA-PSK"}, Layer::wlan, {256},
       "RC4 with doubled IV; key lengths up to 152 bits are also cited, assessed at 256 bits"},
      {"WPA2", {"WPA2-PSK"}, Layer::wlan, {256},
       "AES block cipher (128/192/256-bit keys); assessed at 256 bits"},
      {"802.1X", {"dot1X"}, Layer::access_control, {},
       "port-based access control; asks an authentication server (typically RADIUS)"},
      {"RADIUS", {}, Layer::access_control, {},
       "central user/password database with attributes such as VLAN ID"},
      {"EAP", {}, Layer::access_control, {},
       "extensible intermediary between access-control and authentication protocols"},
      {"TLS", {}, Layer::authentication, {},
       "certificate-based; minimum required by the Wi-Fi Alliance"},
      {"Kerberos", {}, Layer::authentication, {}, "ticket granting with symmetric ciphers (v5)"},
      {"LEAP", {}, Layer::authentication, {},
       "Cisco Light EAP; based on MS-CHAPv1, considered an unsecure protocol"},
      {"PEAP", {}, Layer::authentication, {},
       "Protected EAP; tunnels the EAP session to protect credentials"},
  };
  return table;
}

}  // namespace

std::string_view to_string(Layer layer) noexcept {
  switch (layer) {
    case Layer::wlan: return "wlan";
    case Layer::access_control: return "access-control";
    case Layer::authentication: return "authentication";
  }
  return "unknown";
}

std::optional<Layer> parse_layer(std::string_view text) {
  for (Layer l : {Layer::wlan, Layer::access_control, Layer::authentication}) {
    if (iequals(text, to_string(l))) return l;
  }
  return std::nullopt;
}

bool ProtocolInfo::supports_bits(std::int64_t bits) const noexcept {
  return std::ranges::find(effective_key_bits, bits) != effective_key_bits.end();
}

std::span<const ProtocolInfo> protocol_registry() { return registry(); }

std::optional<ProtocolInfo> find_protocol(std::string_view name) {
  for (const auto& p : registry()) {
    if (iequals(p.name, name)) return p;
    for (const auto& alias : p.aliases) {
      if (iequals(alias, name)) return p;
    }
  }
  return std::nullopt;
}

}  // namespace weaklink
