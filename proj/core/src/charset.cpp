#include "weaklink/charset.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <cctype>

#include "weaklink/error.hpp"

namespace weaklink {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  return std::ranges::equal(a, b, [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) ==
           std::tolower(static_cast<unsigned char>(y));
  });
}

constexpr std::string_view kDigits = "0123456789";
constexpr std::string_view kLower = "abcdefghijklmnopqrstuvwxyz";
constexpr std::string_view kUpper = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";

const std::vector<CharacterSet>& registry() {
  static const std::vector<CharacterSet> sets = [] {
    const std::string digits(kDigits);
    const std::string lower(kLower);
    const std::string upper(kUpper);
    return std::vector<CharacterSet>{
        CharacterSet("digits", digits),
        CharacterSet("hexadecimal", digits + "abcdef"),
        CharacterSet("lowercase", lower),
        CharacterSet("uppercase", upper),
        CharacterSet("letters-one-case-plus-digits", digits + lower),
        CharacterSet("mixed-case-letters", lower + upper),
        CharacterSet("alphanumeric", digits + lower + upper),
    };
  }();
  return sets;
}

}  // namespace

CharacterSet::CharacterSet(std::string name, std::int64_t size)
    : name_(std::move(name)), size_(size) {
  if (size_ < 1) throw InvalidSpec("character set '" + name_ + "' must have at least one symbol");
}

CharacterSet::CharacterSet(std::string name, std::string_view members)
    : name_(std::move(name)), size_(static_cast<std::int64_t>(members.size())) {
  if (members.empty()) throw InvalidSpec("character set '" + name_ + "' has no members");
  std::bitset<256> seen;
  for (char c : members) {
    const auto idx = static_cast<unsigned char>(c);
    if (seen[idx]) {
      throw InvalidSpec("character set '" + name_ + "' repeats symbol '" + std::string(1, c) + "'");
    }
    seen[idx] = true;
  }
  members_ = std::string(members);
}

std::optional<std::size_t> CharacterSet::index_of(char symbol) const {
  if (!members_) return std::nullopt;
  const auto pos = members_->find(symbol);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

std::span<const CharacterSet> charset_registry() { return registry(); }

std::optional<CharacterSet> find_charset(std::string_view name) {
  for (const auto& set : registry()) {
    if (iequals(set.name(), name)) return set;
  }
  return std::nullopt;
}

std::optional<CharacterSet> smallest_charset_at_least(std::int64_t min_size) {
  // Registry is already in ascending size order.
  for (const auto& set : registry()) {
    if (set.size() >= min_size) return set;
  }
  return std::nullopt;
}

}  // namespace weaklink
