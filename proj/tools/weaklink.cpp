// weaklink: brute-force resistance audit for 802.11 security stacks.
//
//   weaklink crack-time --bits 40
//   weaklink crack-time --charset alphanumeric --length 8
//   weaklink min-charset --length 16
//   weaklink tables --which 1,2,3 --format markdown
//   weaklink assess audit.conf --format json
//   weaklink oracle --max-space 100000
//
// Exit status: 0 secure, 1 insecure, 2 usage or config error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "weaklink/config.hpp"
#include "weaklink/error.hpp"
#include "weaklink/format.hpp"
#include "weaklink/keyspace.hpp"
#include "weaklink/oracle.hpp"
#include "weaklink/report.hpp"
#include "weaklink/stack.hpp"

namespace {

using namespace weaklink;

AttackModel attack_from(const std::string& rate) {
  return rate.empty() ? AttackModel::asic_farm() : AttackModel(BigCount::parse(rate));
}

LifetimeBudget budget_from(const std::string& years) {
  return years.empty() ? LifetimeBudget::life_expectancy() : LifetimeBudget::from_decimal(years);
}

int crack_time(std::int64_t bits, const std::string& charset, std::int64_t length,
               const std::string& rate, const std::string& budget_years) {
  const AttackModel attack = attack_from(rate);
  const LifetimeBudget budget = budget_from(budget_years);

  BigCount keyspace;
  std::string what;
  if (bits != 0) {
    if (!charset.empty()) throw UsageError("--bits and --charset are mutually exclusive");
    keyspace = cipher_keyspace(bits);
    what = std::to_string(bits) + "-bit key";
  } else {
    if (charset.empty() || length == 0) throw UsageError("need --bits N, or --charset and --length");
    const CharacterSet set = resolve_charset(charset);
    keyspace = passphrase_keyspace(set.size(), length);
    what = set.name() + " (" + std::to_string(set.size()) + ") x " + std::to_string(length);
  }
  const ExactSeconds d = crack_duration(keyspace, attack);
  const Verdict v = is_secure(d, budget);

  std::cout << what << "\n"
            << "  keyspace:   " << keyspace.to_string() << "\n"
            << "  crack time: " << format_duration(d).text() << "\n"
            << "  exact:      " << d.numerator().str() << "/" << d.denominator().str() << " s\n"
            << "  verdict:    " << to_string(v) << " (budget " << to_exact_string(budget.years())
            << " years)\n";
  return v == Verdict::secure ? kExitSecure : kExitInsecure;
}

int min_charset(std::int64_t length, const std::string& rate, const std::string& budget_years) {
  const CharsetRecommendation rec =
      recommend_min_charset(length, budget_from(budget_years), attack_from(rate));
  std::cout << "length " << length << "\n"
            << "  minimum set size: " << to_significant(rec.real_value, 15) << "\n"
            << "  integer minimum:  " << rec.integer_ceiling.to_string() << "\n"
            << "  smallest named:   "
            << (rec.named_set ? rec.named_set->name() + " (" + std::to_string(rec.named_set->size()) + ")"
                              : std::string("none"))
            << "\n";
  return kExitSecure;
}

int assess(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read config '" << path << "'\n";
    return kExitUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const AuditOutcome outcome = run_audit(buffer.str(), parse_output_format(format));
  (outcome.exit_code == kExitUsage ? std::cerr : std::cout) << outcome.document;
  return outcome.exit_code;
}

int run_oracle(std::uint64_t max_space) {
  bool ok = true;
  double throughput = 0.0;
  std::cout << "exhaustive enumeration (cap " << max_space << ")\n";
  for (const auto& set : charset_registry()) {
    if (set.size() > 16) continue;
    const std::int64_t max_len = set.name() == "digits" ? 5 : 4;
    for (std::int64_t len = 1; len <= max_len; ++len) {
      oracle::EnumerationResult r;
      try {
        r = oracle::enumerate_keyspace(set, len, max_space);
      } catch (const EnumerationCapExceeded&) {
        std::cout << "  " << set.name() << " x " << len << ": skipped (above cap)\n";
        continue;
      }
      const BigCount expected = passphrase_keyspace(set.size(), len);
      const bool match = r.enumerated_count == expected;
      ok = ok && match;
      throughput = std::max(throughput, r.throughput_keys_per_second);
      std::cout << "  " << set.name() << " x " << len << ": " << r.enumerated_count.to_string()
                << (match ? " == " : " != ") << expected.to_string() << "  ("
                << static_cast<long long>(r.throughput_keys_per_second) << " candidates/s)\n";
    }
  }
  if (throughput > 0.0) {
    std::cout << "local extrapolation at " << static_cast<long long>(throughput) << " candidates/s\n";
    for (std::int64_t bits : {40, 104, 256}) {
      const double secs = oracle::extrapolate_local_crack_time(throughput, cipher_keyspace(bits));
      std::cout << "  " << bits << "-bit key: " << secs << " s\n";
    }
    const double pass = oracle::extrapolate_local_crack_time(throughput, passphrase_keyspace(62, 8));
    std::cout << "  alphanumeric x 8: " << pass << " s\n";
  }
  std::cout << (ok ? "all counts match" : "COUNT MISMATCH") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brute-force resistance audit for 802.11 security stacks"};
  app.require_subcommand(1);

  std::int64_t bits = 0;
  std::int64_t length = 0;
  std::string charset;
  std::string rate;
  std::string budget_years;
  std::string format = "text";
  std::string which = "1,2,3";
  std::string config_path;
  std::uint64_t max_space = oracle::kDefaultEnumerationCap;

  auto* crack = app.add_subcommand("crack-time", "Worst-case crack time of a key or passphrase space");
  crack->add_option("--bits", bits, "Effective cipher key bits")->check(CLI::PositiveNumber);
  crack->add_option("--charset", charset, "Registry charset name or explicit size");
  crack->add_option("--length", length, "Passphrase length")->check(CLI::PositiveNumber);
  crack->add_option("--rate", rate, "Attack rate in keys per second (default 10^12)");
  crack->add_option("--budget-years", budget_years, "Security threshold in years (default 89.78)");

  auto* minset = app.add_subcommand("min-charset", "Minimum character-set size for a passphrase length");
  minset->add_option("--length", length, "Passphrase length")->required()->check(CLI::PositiveNumber);
  minset->add_option("--rate", rate, "Attack rate in keys per second (default 10^12)");
  minset->add_option("--budget-years", budget_years, "Security threshold in years (default 89.78)");

  auto* tables = app.add_subcommand("tables", "Regenerate the cipher, passphrase and minimum-set tables");
  tables->add_option("--which", which, "Comma-separated subset of 1,2,3");
  tables->add_option("--format", format, "text, markdown, csv or json");

  auto* audit = app.add_subcommand("assess", "Audit a security stack described by a config file");
  audit->add_option("file", config_path, "Config file (key = value lines)")->required();
  audit->add_option("--format", format, "text, markdown, csv or json");

  auto* orc = app.add_subcommand("oracle", "Enumerate small spaces to validate the counting model");
  orc->add_option("--max-space", max_space, "Largest space to enumerate")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*crack) return crack_time(bits, charset, length, rate, budget_years);
    if (*minset) return min_charset(length, rate, budget_years);
    if (*tables) {
      std::cout << render_tables(parse_table_selection(which), parse_output_format(format));
      return 0;
    }
    if (*audit) return assess(config_path, format);
    if (*orc) return run_oracle(max_space);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
