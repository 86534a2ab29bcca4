#include "weaklink/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "weaklink/error.hpp"
#include "weaklink/format.hpp"
#include "weaklink/tables.hpp"

namespace weaklink {

namespace {

using nlohmann::ordered_json;

struct Grid {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

// Display width in code points, so "×" counts once.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::ranges::count_if(s, [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string render_text(const Grid& g) {
  std::vector<std::size_t> widths(g.headers.size(), 0);
  const auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], display_width(row[i]));
  };
  widen(g.headers);
  for (const auto& r : g.rows) widen(r);

  std::ostringstream out;
  const auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - display_width(row[i]) + 2, ' ');
    }
    out << line << '\n';
  };
  out << g.title << '\n';
  emit(g.headers);
  std::size_t total = 0;
  for (auto w : widths) total += w + 2;
  out << std::string(total - 2, '-') << '\n';
  for (const auto& r : g.rows) emit(r);
  return out.str();
}

std::string render_markdown(const Grid& g) {
  std::ostringstream out;
  out << "### " << g.title << "\n\n";
  const auto emit = [&](const std::vector<std::string>& row) {
    out << '|';
    for (const auto& cell : row) out << ' ' << cell << " |";
    out << '\n';
  };
  emit(g.headers);
  out << '|';
  for (std::size_t i = 0; i < g.headers.size(); ++i) out << " --- |";
  out << '\n';
  for (const auto& r : g.rows) emit(r);
  return out.str();
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Grid& g) {
  std::ostringstream out;
  const auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out << ',';
      out << csv_field(row[i]);
    }
    out << '\n';
  };
  emit(g.headers);
  for (const auto& r : g.rows) emit(r);
  return out.str();
}

std::string render_grid(const Grid& g, OutputFormat format) {
  switch (format) {
    case OutputFormat::text: return render_text(g);
    case OutputFormat::markdown: return render_markdown(g);
    case OutputFormat::csv: return render_csv(g);
    case OutputFormat::json: break;
  }
  throw UsageError("grid rendering does not support json");
}

ordered_json exact_duration(const ExactSeconds& d) {
  return {{"numerator", d.numerator().str()},
          {"denominator", d.denominator().str()},
          {"text", format_duration(d).text()}};
}

std::string verdict_or_dash(const std::optional<Verdict>& v) { return v ? to_string(*v) : "-"; }

std::string budget_text(const LifetimeBudget& b) {
  return to_exact_string(b.years()) + " years (" + to_exact_string(b.seconds().value()) + " s)";
}

// ---- tables -----------------------------------------------------------------

constexpr const char* kTable1Title = "Table 1: WEP / WPA / WPA2 Key Strength: Cipher Strength";
constexpr const char* kTable2Title = "Table 2: WEP / WPA / WPA2 Key Strength: User Given Passphrase Strength";
constexpr const char* kTable3Title =
    "Table 3: Minimum Number of Characters in the Set to Ensure a 'Secure' Passphrase";

std::string bits_label(std::int64_t bits) { return std::to_string(bits) + "-bits"; }

std::string cell_text(const PassphraseStrengthRow& row, const PassphraseCell& cell) {
  std::string text = format_duration(cell.duration).text();
  if (cell.exceeds_cipher) {
    if (row.variant == RowVariant::calculated) text += " (calculated)";
    if (row.variant == RowVariant::practical) text += " (practical)";
  }
  return text;
}

std::string_view variant_name(RowVariant v) {
  switch (v) {
    case RowVariant::plain: return "";
    case RowVariant::calculated: return "calculated";
    case RowVariant::practical: return "practical";
  }
  return "";
}

Grid table1_grid(const std::vector<CipherStrengthRow>& rows, bool machine) {
  Grid g{kTable1Title, {}, {}};
  if (machine) {
    g.headers = {"key_bits", "found_in", "keyspace", "duration_numerator", "duration_denominator",
                 "duration_text"};
    for (const auto& r : rows) {
      g.rows.push_back({std::to_string(r.bits), r.found_in, r.keyspace.to_string(),
                        r.duration.numerator().str(), r.duration.denominator().str(),
                        format_duration(r.duration).text()});
    }
  } else {
    g.headers = {"Key Length", "Typically Found in", "Duration of Cracking"};
    for (const auto& r : rows) {
      g.rows.push_back({bits_label(r.bits), r.found_in,
                        "2^" + std::to_string(r.bits) + " / rate = " + format_duration(r.duration).text()});
    }
  }
  return g;
}

Grid table2_grid(const std::vector<PassphraseStrengthRow>& rows, bool machine) {
  Grid g{kTable2Title, {}, {}};
  if (machine) {
    g.headers = {"cipher", "key_bits", "length", "variant", "set_size", "keyspace",
                 "duration_numerator", "duration_denominator", "duration_text"};
    for (const auto& r : rows) {
      for (const auto& c : r.cells) {
        g.rows.push_back({r.cipher_label, std::to_string(r.cipher_bits), std::to_string(r.length),
                          std::string(variant_name(r.variant)), std::to_string(c.set_size),
                          c.keyspace.to_string(), c.duration.numerator().str(),
                          c.duration.denominator().str(), format_duration(c.duration).text()});
      }
    }
  } else {
    g.headers = {"Encryption Key Length", "Passphrase Length"};
    for (auto size : passphrase_table_set_sizes()) {
      g.headers.push_back("Using " + std::to_string(size) + " character set");
    }
    for (const auto& r : rows) {
      std::vector<std::string> line{r.cipher_label, std::to_string(r.length) + " Characters"};
      for (const auto& c : r.cells) line.push_back(cell_text(r, c));
      g.rows.push_back(std::move(line));
    }
  }
  return g;
}

Grid table3_grid(const std::vector<MinCharsetRow>& rows, bool machine) {
  Grid g{kTable3Title, {}, {}};
  if (machine) {
    g.headers = {"cipher", "key_bits", "length", "minimum_set_size", "integer_minimum"};
    for (const auto& r : rows) {
      g.rows.push_back({r.cipher_label, std::to_string(r.cipher_bits), std::to_string(r.length),
                        to_significant(r.minimum, 15), r.integer_ceiling.to_string()});
    }
  } else {
    g.headers = {"Encryption Key Length", "Passphrase Length", "Minimum Number of Characters in the Set",
                 "Smallest Whole Set"};
    for (const auto& r : rows) {
      g.rows.push_back({r.cipher_label, std::to_string(r.length) + " Characters",
                        to_significant(r.minimum, 9), r.integer_ceiling.to_string()});
    }
  }
  return g;
}

ordered_json tables_json(const std::vector<int>& which, const AttackModel& attack,
                         const LifetimeBudget& budget) {
  ordered_json doc;
  doc["attack_rate_keys_per_second"] = attack.rate().to_string();
  doc["lifetime_budget_years"] = to_exact_string(budget.years());
  doc["tables"] = ordered_json::array();
  for (int id : which) {
    ordered_json t;
    t["id"] = id;
    ordered_json rows = ordered_json::array();
    if (id == 1) {
      t["title"] = kTable1Title;
      for (const auto& r : cipher_strength_table(attack)) {
        rows.push_back({{"key_bits", r.bits},
                        {"found_in", r.found_in},
                        {"keyspace", r.keyspace.to_string()},
                        {"duration", exact_duration(r.duration)}});
      }
    } else if (id == 2) {
      t["title"] = kTable2Title;
      for (const auto& r : passphrase_strength_table(attack)) {
        ordered_json cells = ordered_json::array();
        for (const auto& c : r.cells) {
          cells.push_back({{"set_size", c.set_size},
                           {"keyspace", c.keyspace.to_string()},
                           {"exceeds_cipher", c.exceeds_cipher},
                           {"duration", exact_duration(c.duration)}});
        }
        rows.push_back({{"cipher", r.cipher_label},
                        {"key_bits", r.cipher_bits},
                        {"length", r.length},
                        {"variant", variant_name(r.variant)},
                        {"cells", std::move(cells)}});
      }
    } else {
      t["title"] = kTable3Title;
      for (const auto& r : min_charset_table(budget, attack)) {
        rows.push_back({{"cipher", r.cipher_label},
                        {"key_bits", r.cipher_bits},
                        {"length", r.length},
                        {"minimum_set_size", to_significant(r.minimum, 15)},
                        {"integer_minimum", r.integer_ceiling.to_string()}});
      }
    }
    t["rows"] = std::move(rows);
    doc["tables"].push_back(std::move(t));
  }
  return doc;
}

// ---- report -----------------------------------------------------------------

ordered_json report_json(const WeakestLinkReport& report) {
  ordered_json doc;
  doc["attack_rate_keys_per_second"] = report.attack.rate().to_string();
  doc["lifetime_budget"] = {{"years", to_exact_string(report.budget.years())},
                            {"seconds", exact_duration(report.budget.seconds())}};
  ordered_json items = ordered_json::array();
  int rank = 0;
  for (const auto& a : report.assessments) {
    ordered_json item;
    item["id"] = a.component_id;
    item["kind"] = a.kind;
    item["label"] = a.label;
    if (a.assessable()) {
      item["rank"] = ++rank;
      item["keyspace"] = a.keyspace->to_string();
      item["capped"] = a.capped;
      item["duration"] = exact_duration(*a.duration);
      item["verdict"] = to_string(*a.verdict);
    } else {
      item["rank"] = nullptr;
      item["duration"] = {{"text", a.duration_text}};
    }
    items.push_back(std::move(item));
  }
  doc["components"] = std::move(items);
  doc["weakest_id"] = report.weakest_id;
  doc["overall"] = to_string(report.overall);
  ordered_json rec;
  rec["text"] = report.recommendation.text;
  if (const auto& c = report.recommendation.charset) {
    rec["passphrase_length"] = c->length;
    rec["minimum_set_size"] = to_significant(c->real_value, 15);
    rec["integer_minimum"] = c->integer_ceiling.to_string();
    rec["named_set"] = c->named_set ? ordered_json(c->named_set->name()) : ordered_json(nullptr);
  }
  doc["recommendation"] = std::move(rec);
  return doc;
}

Grid report_grid(const WeakestLinkReport& report, bool machine) {
  Grid g{"Weakest-link audit", {}, {}};
  if (machine) {
    g.headers = {"rank", "id", "kind", "label", "keyspace", "duration_numerator",
                 "duration_denominator", "duration_text", "verdict"};
  } else {
    g.headers = {"Rank", "Component", "Kind", "Description", "Keyspace", "Crack time", "Verdict"};
  }
  int rank = 0;
  for (const auto& a : report.assessments) {
    const std::string r = a.assessable() ? std::to_string(++rank) : "-";
    const std::string ks = a.keyspace ? a.keyspace->to_string() : "-";
    if (machine) {
      g.rows.push_back({r, a.component_id, a.kind, a.label, a.keyspace ? ks : "",
                        a.duration ? a.duration->numerator().str() : "",
                        a.duration ? a.duration->denominator().str() : "", a.duration_text,
                        a.verdict ? to_string(*a.verdict) : ""});
    } else {
      g.rows.push_back({r, a.component_id, a.kind, a.label, ks, a.duration_text, verdict_or_dash(a.verdict)});
    }
  }
  return g;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "markdown" || name == "md") return OutputFormat::markdown;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw UsageError("unknown output format '" + std::string(name) + "' (text, markdown, csv, json)");
}

std::vector<int> parse_table_selection(std::string_view text) {
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view tok = text.substr(0, comma);
    if (tok != "1" && tok != "2" && tok != "3") {
      throw UsageError("unknown table '" + std::string(tok) + "' (choose from 1, 2, 3)");
    }
    const int id = tok[0] - '0';
    if (std::ranges::find(out, id) == out.end()) out.push_back(id);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  std::ranges::sort(out);
  return out;
}

std::string render_tables(const std::vector<int>& which, OutputFormat format) {
  const AttackModel attack = AttackModel::asic_farm();
  const LifetimeBudget budget = LifetimeBudget::life_expectancy();
  for (int id : which) {
    if (id < 1 || id > 3) throw UsageError("unknown table '" + std::to_string(id) + "'");
  }
  if (format == OutputFormat::json) return tables_json(which, attack, budget).dump(2) + "\n";

  const bool machine = format == OutputFormat::csv;
  std::string out;
  for (int id : which) {
    if (!out.empty()) out += '\n';
    switch (id) {
      case 1: out += render_grid(table1_grid(cipher_strength_table(attack), machine), format); break;
      case 2: out += render_grid(table2_grid(passphrase_strength_table(attack), machine), format); break;
      case 3: out += render_grid(table3_grid(min_charset_table(budget, attack), machine), format); break;
    }
  }
  return out;
}

std::string render_report(const WeakestLinkReport& report, OutputFormat format) {
  if (format == OutputFormat::json) return report_json(report).dump(2) + "\n";
  if (format == OutputFormat::csv) return render_csv(report_grid(report, true));

  std::ostringstream out;
  const bool md = format == OutputFormat::markdown;
  const std::string bullet = md ? "- " : "";
  out << render_grid(report_grid(report, false), format) << '\n';
  out << bullet << "Attack rate: " << report.attack.rate().to_string() << " keys/s\n";
  out << bullet << "Lifetime budget: " << budget_text(report.budget) << '\n';
  out << bullet << "Weakest link: " << report.weakest_id << '\n';
  out << bullet << "Overall: " << to_string(report.overall) << '\n';
  out << bullet << "Recommendation: " << report.recommendation.text << '\n';
  return out.str();
}

AuditOutcome run_audit(const AuditConfig& config, OutputFormat format) {
  const WeakestLinkReport report = weakest_link(build_stack(config));
  return {render_report(report, format),
          report.overall == Verdict::secure ? kExitSecure : kExitInsecure};
}

AuditOutcome run_audit(std::string_view config_text, OutputFormat format) {
  try {
    return run_audit(parse_config(config_text), format);
  } catch (const ConfigError& e) {
    return {std::string("config error: ") + e.what() + "\n", kExitUsage};
  } catch (const InvalidSpec& e) {
    return {std::string("config error: ") + e.what() + "\n", kExitUsage};
  }
}

}  // namespace weaklink
