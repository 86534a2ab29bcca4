#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weaklink/big.hpp"
#include "weaklink/charset.hpp"
#include "weaklink/keyspace.hpp"
#include "weaklink/protocols.hpp"

namespace weaklink {

struct CipherComponent {
  CipherSpec cipher;
};

/// A user-chosen passphrase; the governing cipher, when present, caps the
/// keyspace at 2^bits.
struct PassphraseComponent {
  PassphrasePolicy policy;
  std::optional<CipherSpec> governing_cipher;
};

/// Documented but unquantified part of the stack (802.1X, RADIUS, TLS, ...).
struct DescriptiveComponent {
  Layer layer;
  std::string protocol_name;
};

struct SecurityComponent {
  std::string id;
  std::variant<CipherComponent, PassphraseComponent, DescriptiveComponent> kind;

  bool assessable() const noexcept {
    return !std::holds_alternative<DescriptiveComponent>(kind);
  }
  /// "cipher", "passphrase" or "descriptive".
  std::string_view kind_name() const noexcept;
};

class SecurityStack {
 public:
  /// Throws InvalidSpec on duplicate ids or when no component is assessable.
  SecurityStack(std::vector<SecurityComponent> components, AttackModel attack,
                LifetimeBudget budget);

  const std::vector<SecurityComponent>& components() const noexcept { return components_; }
  const AttackModel& attack() const noexcept { return attack_; }
  const LifetimeBudget& budget() const noexcept { return budget_; }

 private:
  std::vector<SecurityComponent> components_;
  AttackModel attack_;
  LifetimeBudget budget_;
};

struct ComponentAssessment {
  std::string component_id;
  std::string kind;
  std::string label;  // e.g. "WPA2 256-bit key", "alphanumeric x 8 (capped by WPA2)"
  std::optional<BigCount> keyspace;
  std::optional<ExactSeconds> duration;
  std::string duration_text;
  std::optional<Verdict> verdict;
  bool capped = false;

  bool assessable() const noexcept { return keyspace.has_value(); }
};

struct CharsetRecommendation {
  std::int64_t length;
  Real real_value;
  BigCount integer_ceiling;
  std::optional<CharacterSet> named_set;
};

struct Recommendation {
  std::string text;
  std::optional<CharsetRecommendation> charset;
};

struct WeakestLinkReport {
  std::vector<ComponentAssessment> assessments;
  std::string weakest_id;
  Verdict overall;
  Recommendation recommendation;
  AttackModel attack;
  LifetimeBudget budget;
};

ComponentAssessment assess_component(const SecurityComponent& component,
                                     const AttackModel& attack, const LifetimeBudget& budget);

/// Ranks assessable components by exact crack time (stable on ties),
/// appends descriptive ones unranked, and ANDs the verdicts.
WeakestLinkReport weakest_link(const SecurityStack& stack);

CharsetRecommendation recommend_min_charset(std::int64_t length, const LifetimeBudget& budget,
                                            const AttackModel& attack);

}  // namespace weaklink
