#include <gtest/gtest.h>

#include "json.hpp"
#include "weaklink/error.hpp"
#include "weaklink/report.hpp"
#include "weaklink/tables.hpp"

namespace weaklink {
namespace {

using nlohmann::json;

constexpr std::string_view kAlnum8 =
    "wlan_protocol = WPA2\npassphrase_length = 8\npassphrase_charset = alphanumeric\n";
constexpr std::string_view kLower63 =
    "wlan_protocol = WPA2\npassphrase_length = 63\npassphrase_charset = lowercase\n";

TEST(RunAudit, AlphanumericEightIsInsecure) {
  const auto out = run_audit(kAlnum8, OutputFormat::json);
  EXPECT_EQ(out.exit_code, kExitInsecure);
  const json doc = json::parse(out.document);
  EXPECT_EQ(doc["weakest_id"], "passphrase");
  EXPECT_EQ(doc["overall"], "insecure");
  EXPECT_EQ(doc["components"][0]["duration"]["text"], "3.63900176 minutes");
  EXPECT_EQ(doc["recommendation"]["integer_minimum"], "481");
  EXPECT_TRUE(doc["recommendation"]["named_set"].is_null());
}

TEST(RunAudit, LowercaseSixtyThreeIsSecure) {
  const auto out = run_audit(kLower63, OutputFormat::text);
  EXPECT_EQ(out.exit_code, kExitSecure);
  EXPECT_NE(out.document.find("Overall: secure"), std::string::npos);
}

TEST(RunAudit, UnknownProtocolIsUsageError) {
  const auto out = run_audit("wlan_protocol = WEP3\n", OutputFormat::text);
  EXPECT_EQ(out.exit_code, kExitUsage);
  EXPECT_NE(out.document.find("WEP3"), std::string::npos);
}

TEST(RunAudit, JsonCarriesExactValues) {
  const json doc = json::parse(run_audit(kAlnum8, OutputFormat::json).document);
  const auto& pass = doc["components"][0];
  EXPECT_EQ(pass["keyspace"], "218340105584896");
  const BigRational d(BigInt(pass["duration"]["numerator"].get<std::string>()),
                      BigInt(pass["duration"]["denominator"].get<std::string>()));
  EXPECT_EQ(d, BigRational(BigInt(218340105584896ULL), BigInt(1'000'000'000'000ULL)));
  EXPECT_EQ(doc["components"][1]["keyspace"].get<std::string>().size(), 78u);
}

TEST(RunAudit, CsvHasExactColumns) {
  const auto out = run_audit(kAlnum8, OutputFormat::csv);
  EXPECT_EQ(out.document.substr(0, out.document.find('\n')),
            "rank,id,kind,label,keyspace,duration_numerator,duration_denominator,duration_text,verdict");
  EXPECT_NE(out.document.find("1,passphrase,passphrase,alphanumeric (62 symbols) x 8 characters,"
                              "218340105584896,852891037441,3906250000,3.63900176 minutes,insecure"),
            std::string::npos);
}

TEST(RunAudit, DescriptiveComponentsListedUnranked) {
  const auto out = run_audit(
      "wlan_protocol = WPA2\npassphrase_length = 8\ndescriptive_component = authentication:LEAP\n",
      OutputFormat::json);
  const json doc = json::parse(out.document);
  ASSERT_EQ(doc["components"].size(), 3u);
  EXPECT_TRUE(doc["components"][2]["rank"].is_null());
  EXPECT_EQ(doc["components"][2]["kind"], "descriptive");
  EXPECT_EQ(out.exit_code, kExitInsecure);
}

TEST(RenderReport, MarkdownHasTable) {
  const auto out = run_audit(kAlnum8, OutputFormat::markdown);
  EXPECT_NE(out.document.find("| Rank | Component |"), std::string::npos);
  EXPECT_NE(out.document.find("- Weakest link: passphrase"), std::string::npos);
}

TEST(OutputFormat, Parse) {
  EXPECT_EQ(parse_output_format("json"), OutputFormat::json);
  EXPECT_EQ(parse_output_format("markdown"), OutputFormat::markdown);
  EXPECT_THROW(parse_output_format("yaml"), UsageError);
}

TEST(TableSelection, Parse) {
  EXPECT_EQ(parse_table_selection("3,1"), (std::vector<int>{1, 3}));
  EXPECT_EQ(parse_table_selection("2"), (std::vector<int>{2}));
  EXPECT_THROW(parse_table_selection("4"), UsageError);
  EXPECT_THROW(parse_table_selection("1,,2"), UsageError);
}

TEST(RenderTables, Table1HasThreeRows) {
  const json doc = json::parse(render_tables({1}, OutputFormat::json));
  ASSERT_EQ(doc["tables"].size(), 1u);
  const auto& rows = doc["tables"][0]["rows"];
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["duration"]["text"], "1.09951163 seconds");
  EXPECT_EQ(rows[2]["duration"]["text"], "3.67174306×10^57 years");
}

TEST(RenderTables, Table2EightCharDigitsCell) {
  const auto rows = passphrase_strength_table(AttackModel::asic_farm());
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[1].length, 8);
  EXPECT_EQ(rows[1].cells[0].set_size, 10);
  const std::string text = render_tables({2}, OutputFormat::text);
  EXPECT_NE(text.find("100 microseconds"), std::string::npos);
  EXPECT_NE(text.find("(calculated)"), std::string::npos);
  EXPECT_NE(text.find("(practical)"), std::string::npos);
}

TEST(RenderTables, Table3SixRows) {
  const json doc = json::parse(render_tables({3}, OutputFormat::json));
  EXPECT_EQ(doc["tables"][0]["rows"].size(), 6u);
  EXPECT_EQ(doc["tables"][0]["rows"][3]["integer_minimum"], "22");
}

TEST(RenderTables, DeterministicAcrossRunsAndFormats) {
  for (auto f : {OutputFormat::text, OutputFormat::markdown, OutputFormat::csv, OutputFormat::json}) {
    EXPECT_EQ(render_tables({1, 2, 3}, f), render_tables({1, 2, 3}, f));
  }
}

TEST(RenderTables, CsvTable2IsLongFormat) {
  const std::string csv = render_tables({2}, OutputFormat::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "cipher,key_bits,length,variant,set_size,keyspace,duration_numerator,duration_denominator,"
            "duration_text");
  // header + 7 rows x 5 sets
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 36);
}

}  // namespace
}  // namespace weaklink
