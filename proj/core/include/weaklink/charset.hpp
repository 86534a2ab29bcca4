#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weaklink {

/// An alphabet passphrases are drawn from. Members are optional: a set known
/// only by its size can be assessed analytically but not enumerated.
class CharacterSet {
 public:
  /// Size-only set. Throws InvalidSpec if size < 1.
  CharacterSet(std::string name, std::int64_t size);

  /// Explicit members, one symbol per char. Throws InvalidSpec on an empty or
  /// duplicated member list.
  CharacterSet(std::string name, std::string_view members);

  const std::string& name() const noexcept { return name_; }
  std::int64_t size() const noexcept { return size_; }
  bool has_members() const noexcept { return members_.has_value(); }

  /// Empty view when the set is size-only.
  std::string_view members() const noexcept {
    return members_ ? std::string_view(*members_) : std::string_view{};
  }

  /// Index of `symbol` in the member list, if present.
  std::optional<std::size_t> index_of(char symbol) const;

  friend bool operator==(const CharacterSet&, const CharacterSet&) = default;

 private:
  std::string name_;
  std::int64_t size_;
  std::optional<std::string> members_;
};

/// Named sets in ascending size order: digits(10), hexadecimal(16),
/// lowercase(26), uppercase(26), letters-one-case-plus-digits(36),
/// mixed-case-letters(52), alphanumeric(62).
std::span<const CharacterSet> charset_registry();

/// Case-insensitive lookup by registry name.
std::optional<CharacterSet> find_charset(std::string_view name);

/// Smallest registry set with at least `min_size` symbols; ties go to the
/// earlier registry entry.
std::optional<CharacterSet> smallest_charset_at_least(std::int64_t min_size);

}  // namespace weaklink
