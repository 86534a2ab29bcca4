#include "weaklink/stack.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "weaklink/error.hpp"
#include "weaklink/format.hpp"

namespace weaklink {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string cipher_label(const CipherSpec& c) {
  return c.protocol_label + " " + std::to_string(c.effective_key_bits) + "-bit key";
}

std::string recommendation_text(const ComponentAssessment& weakest, const SecurityComponent& component,
                                const std::optional<CharsetRecommendation>& charset,
                                Verdict overall) {
  std::ostringstream out;
  out << "Weakest link: " << weakest.component_id << " (" << weakest.label << "), cracked in "
      << weakest.duration_text << ".";
  if (std::holds_alternative<PassphraseComponent>(component.kind)) {
    out << " Passphrases must be generated completely randomly.";
    if (charset) {
      out << " At " << charset->length << " characters the set needs at least "
          << charset->integer_ceiling.to_string() << " symbols";
      if (charset->named_set) {
        out << " (e.g. " << charset->named_set->name() << ", " << charset->named_set->size()
            << " symbols).";
      } else {
        out << "; no standard character set is that large, so use a longer passphrase.";
      }
    }
  } else if (overall == Verdict::insecure) {
    out << " Move to a protocol with a larger effective key.";
  }
  if (overall == Verdict::secure) out << " Every assessed component outlasts the budget.";
  return out.str();
}

}  // namespace

std::string_view SecurityComponent::kind_name() const noexcept {
  return std::visit(overloaded{
                        [](const CipherComponent&) { return std::string_view("cipher"); },
                        [](const PassphraseComponent&) { return std::string_view("passphrase"); },
                        [](const DescriptiveComponent&) { return std::string_view("descriptive"); },
                    },
                    kind);
}

SecurityStack::SecurityStack(std::vector<SecurityComponent> components, AttackModel attack,
                             LifetimeBudget budget)
    : components_(std::move(components)), attack_(std::move(attack)), budget_(std::move(budget)) {
  std::set<std::string> ids;
  for (const auto& c : components_) {
    if (!ids.insert(c.id).second) throw InvalidSpec("duplicate component id '" + c.id + "'");
  }
  if (std::ranges::none_of(components_, &SecurityComponent::assessable)) {
    throw InvalidSpec("security stack needs at least one cipher or passphrase component");
  }
}

ComponentAssessment assess_component(const SecurityComponent& component, const AttackModel& attack,
                                     const LifetimeBudget& budget) {
  ComponentAssessment a;
  a.component_id = component.id;
  a.kind = std::string(component.kind_name());

  std::visit(overloaded{
                 [&](const CipherComponent& c) {
                   a.label = cipher_label(c.cipher);
                   a.keyspace = cipher_keyspace(c.cipher.effective_key_bits);
                 },
                 [&](const PassphraseComponent& p) {
                   const BigCount raw = passphrase_keyspace(p.policy);
                   std::optional<BigCount> cap;
                   if (p.governing_cipher) cap = cipher_keyspace(p.governing_cipher->effective_key_bits);
                   a.keyspace = effective_keyspace(raw, cap);
                   a.capped = cap && *cap < raw;
                   a.label = p.policy.charset.name() + " (" + std::to_string(p.policy.charset.size()) +
                             " symbols) x " + std::to_string(p.policy.length) + " characters";
                   if (a.capped) a.label += ", capped by " + cipher_label(*p.governing_cipher);
                 },
                 [&](const DescriptiveComponent& d) {
                   a.label = std::string(to_string(d.layer)) + ": " + d.protocol_name;
                   a.duration_text = "not quantified";
                 },
             },
             component.kind);

  if (a.keyspace) {
    a.duration = crack_duration(*a.keyspace, attack);
    a.duration_text = format_duration(*a.duration).text();
    a.verdict = is_secure(*a.duration, budget);
  }
  return a;
}

WeakestLinkReport weakest_link(const SecurityStack& stack) {
  std::vector<ComponentAssessment> ranked;
  std::vector<ComponentAssessment> descriptive;
  std::vector<const SecurityComponent*> ranked_src;
  for (const auto& c : stack.components()) {
    auto a = assess_component(c, stack.attack(), stack.budget());
    if (a.assessable()) {
      ranked.push_back(std::move(a));
      ranked_src.push_back(&c);
    } else {
      descriptive.push_back(std::move(a));
    }
  }
  if (ranked.empty()) throw InvalidSpec("nothing to rank: stack has no assessable component");

  std::vector<std::size_t> order(ranked.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::ranges::stable_sort(order, [&](std::size_t x, std::size_t y) {
    return *ranked[x].duration < *ranked[y].duration;
  });

  WeakestLinkReport report{.assessments = {},
                           .weakest_id = ranked[order.front()].component_id,
                           .overall = Verdict::secure,
                           .recommendation = {},
                           .attack = stack.attack(),
                           .budget = stack.budget()};
  for (std::size_t i : order) {
    if (*ranked[i].verdict == Verdict::insecure) report.overall = Verdict::insecure;
    report.assessments.push_back(ranked[i]);
  }
  for (auto& d : descriptive) report.assessments.push_back(std::move(d));

  const SecurityComponent& weakest = *ranked_src[order.front()];
  if (const auto* p = std::get_if<PassphraseComponent>(&weakest.kind);
      p != nullptr && !stack.budget().years().is_zero()) {
    report.recommendation.charset =
        recommend_min_charset(p->policy.length, stack.budget(), stack.attack());
  }
  report.recommendation.text = recommendation_text(report.assessments.front(), weakest,
                                                   report.recommendation.charset, report.overall);
  return report;
}

CharsetRecommendation recommend_min_charset(std::int64_t length, const LifetimeBudget& budget,
                                            const AttackModel& attack) {
  CharsetRecommendation rec{.length = length,
                            .real_value = min_charset_size(length, budget, attack),
                            .integer_ceiling = exact_min_charset_size(length, budget, attack),
                            .named_set = std::nullopt};
  if (rec.integer_ceiling.value() <= std::numeric_limits<std::int64_t>::max()) {
    rec.named_set =
        smallest_charset_at_least(rec.integer_ceiling.value().convert_to<std::int64_t>());
  }
  return rec;
}

}  // namespace weaklink
