#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "weaklink/config.hpp"
#include "weaklink/stack.hpp"

namespace weaklink {

enum class OutputFormat { text, markdown, csv, json };

/// Throws UsageError naming the token.
OutputFormat parse_output_format(std::string_view name);

inline constexpr int kExitSecure = 0;
inline constexpr int kExitInsecure = 1;
inline constexpr int kExitUsage = 2;

/// Machine formats (csv, json) carry exact keyspace and duration
/// numerator/denominator strings next to the formatted text.
std::string render_report(const WeakestLinkReport& report, OutputFormat format);

/// "1,2,3" -> {1, 2, 3}. Throws UsageError on anything outside 1..3.
std::vector<int> parse_table_selection(std::string_view text);

std::string render_tables(const std::vector<int>& which, OutputFormat format);

struct AuditOutcome {
  std::string document;
  int exit_code;
};

/// Builds the stack, ranks it and renders the report. Exit code 0 when every
/// assessable component is secure, 1 otherwise.
AuditOutcome run_audit(const AuditConfig& config, OutputFormat format);

/// parse_config + run_audit; config errors become exit code 2 with the error
/// message as the document.
AuditOutcome run_audit(std::string_view config_text, OutputFormat format);

}  // namespace weaklink
