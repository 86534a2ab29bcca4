#include "weaklink/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "weaklink/error.hpp"

namespace weaklink {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::ranges::transform(out, out.begin(),
                         [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::optional<std::int64_t> parse_positive(std::string_view text) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v < 1) return std::nullopt;
  return v;
}

std::string join_bits(const std::vector<std::int64_t>& bits) {
  std::string out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(bits[i]);
  }
  return out;
}

}  // namespace

CharacterSet resolve_charset(std::string_view token) {
  if (auto named = find_charset(token)) return *named;
  if (!token.empty() && std::ranges::all_of(token, [](unsigned char c) { return std::isdigit(c); })) {
    if (const auto size = parse_positive(token)) return CharacterSet("custom-" + std::to_string(*size), *size);
  }
  throw UsageError("unknown character set '" + std::string(token) + "'");
}

AuditConfig parse_config(std::string_view text) {
  AuditConfig cfg;
  std::map<std::string, std::size_t> seen;  // key -> line
  std::optional<ProtocolInfo> protocol;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "missing key before '='");
    if (value.empty()) throw ConfigError(line_no, "missing value for '" + key + "'");

    if (key != "descriptive_component") {
      if (const auto it = seen.find(key); it != seen.end()) {
        throw ConfigError(line_no, "duplicate key '" + key + "' (first set on line " +
                                       std::to_string(it->second) + ")");
      }
    }
    const auto malformed = [&](const std::string& what) {
      return ConfigError(line_no, "malformed value '" + std::string(value) + "' for '" + key +
                                      "': expected " + what);
    };

    if (key == "wlan_protocol") {
      protocol = find_protocol(value);
      if (!protocol) throw ConfigError(line_no, "unknown protocol '" + std::string(value) + "'");
      if (protocol->layer != Layer::wlan || !protocol->has_key_bits()) {
        throw ConfigError(line_no, "'" + std::string(value) +
                                       "' is not a wlan cipher protocol (layer " +
                                       std::string(to_string(protocol->layer)) + ")");
      }
      cfg.wlan_protocol = protocol->name;
    } else if (key == "effective_key_bits") {
      cfg.effective_key_bits = parse_positive(value);
      if (!cfg.effective_key_bits) throw malformed("a positive integer");
    } else if (key == "passphrase_length") {
      cfg.passphrase_length = parse_positive(value);
      if (!cfg.passphrase_length) throw malformed("a positive integer");
    } else if (key == "passphrase_charset") {
      try {
        cfg.passphrase_charset = resolve_charset(value);
      } catch (const UsageError&) {
        throw ConfigError(line_no, "unknown character set '" + std::string(value) + "'");
      }
    } else if (key == "attack_rate_keys_per_second") {
      try {
        cfg.attack_rate_keys_per_second = BigCount::parse(value);
      } catch (const InvalidSpec&) {
        throw malformed("a positive integer");
      }
      if (cfg.attack_rate_keys_per_second.is_zero()) throw malformed("a rate of at least 1");
    } else if (key == "lifetime_budget_years") {
      try {
        cfg.lifetime_budget_years = parse_decimal(value);
      } catch (const InvalidSpec&) {
        throw malformed("a non-negative decimal");
      }
    } else if (key == "descriptive_component") {
      const auto colon = value.find(':');
      if (colon == std::string_view::npos) throw malformed("'layer:protocol'");
      const std::string_view layer_text = trim(value.substr(0, colon));
      const std::string_view name = trim(value.substr(colon + 1));
      const auto layer = parse_layer(layer_text);
      if (!layer) throw ConfigError(line_no, "unknown layer '" + std::string(layer_text) + "'");
      const auto info = find_protocol(name);
      if (!info) throw ConfigError(line_no, "unknown protocol '" + std::string(name) + "'");
      if (info->layer != *layer) {
        throw ConfigError(line_no, "protocol '" + info->name + "' belongs to layer " +
                                       std::string(to_string(info->layer)) + ", not " +
                                       std::string(layer_text));
      }
      cfg.descriptive_components.push_back({*layer, info->name});
    } else {
      throw ConfigError(line_no, "unknown key '" + key + "'");
    }
    seen.emplace(key, line_no);
  }

  if (!protocol) throw ConfigError(0, "missing required key 'wlan_protocol'");

  if (cfg.effective_key_bits) {
    if (!protocol->supports_bits(*cfg.effective_key_bits)) {
      throw ConfigError(seen.at("effective_key_bits"),
                        protocol->name + " does not use " + std::to_string(*cfg.effective_key_bits) +
                            "-bit keys (known: " + join_bits(protocol->effective_key_bits) + ")");
    }
  } else if (protocol->effective_key_bits.size() == 1) {
    cfg.effective_key_bits = protocol->effective_key_bits.front();
  } else {
    throw ConfigError(seen.at("wlan_protocol"),
                      protocol->name + " has several key sizes (" +
                          join_bits(protocol->effective_key_bits) + "); set effective_key_bits");
  }

  if (seen.contains("passphrase_charset") && !cfg.passphrase_length) {
    throw ConfigError(seen.at("passphrase_charset"),
                      "passphrase_charset given without passphrase_length");
  }
  return cfg;
}

SecurityStack build_stack(const AuditConfig& config) {
  if (!config.effective_key_bits) throw ConfigError(0, "effective_key_bits unresolved");
  const CipherSpec cipher = CipherSpec::named(config.wlan_protocol, *config.effective_key_bits);

  std::vector<SecurityComponent> components;
  components.push_back({"cipher", CipherComponent{cipher}});
  if (config.passphrase_length) {
    components.push_back(
        {"passphrase",
         PassphraseComponent{PassphrasePolicy(config.passphrase_charset, *config.passphrase_length),
                             cipher}});
  }
  std::map<std::string, int> used;
  for (const auto& d : config.descriptive_components) {
    std::string id = lower(d.protocol_name);
    if (const int n = ++used[id]; n > 1) id += "-" + std::to_string(n);
    components.push_back({id, DescriptiveComponent{d.layer, d.protocol_name}});
  }
  return SecurityStack(std::move(components), AttackModel(config.attack_rate_keys_per_second),
                       LifetimeBudget(config.lifetime_budget_years));
}

}  // namespace weaklink
