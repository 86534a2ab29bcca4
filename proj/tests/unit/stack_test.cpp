#include <gtest/gtest.h>

#include "weaklink/error.hpp"
#include "weaklink/stack.hpp"

namespace weaklink {
namespace {

const AttackModel kAsic = AttackModel::asic_farm();
const LifetimeBudget kBudget = LifetimeBudget::life_expectancy();

SecurityComponent cipher(std::string id, std::string_view proto, std::int64_t bits) {
  return {std::move(id), CipherComponent{CipherSpec::named(proto, bits)}};
}

SecurityComponent passphrase(std::string id, std::string_view set, std::int64_t len,
                             std::optional<CipherSpec> gov = std::nullopt) {
  return {std::move(id), PassphraseComponent{PassphrasePolicy(*find_charset(set), len), gov}};
}

SecurityComponent descriptive(std::string id, Layer layer, std::string name) {
  return {std::move(id), DescriptiveComponent{layer, std::move(name)}};
}

TEST(AssessComponent, Wep40Cipher) {
  const auto a = assess_component(cipher("c", "WEP", 40), kAsic, kBudget);
  EXPECT_EQ(a.duration_text, "1.09951163 seconds");
  EXPECT_EQ(a.verdict, Verdict::insecure);
  EXPECT_EQ(*a.keyspace, cipher_keyspace(40));
}

TEST(AssessComponent, GovernedAlphanumericEight) {
  const auto a = assess_component(passphrase("p", "alphanumeric", 8, CipherSpec::named("WPA2", 256)),
                                  kAsic, kBudget);
  EXPECT_EQ(a.duration_text, "3.63900176 minutes");
  EXPECT_EQ(a.verdict, Verdict::insecure);
  EXPECT_FALSE(a.capped);
}

TEST(AssessComponent, LowercaseSixtyThreeIsCapped) {
  const auto a = assess_component(passphrase("p", "lowercase", 63, CipherSpec::named("WPA2", 256)),
                                  kAsic, kBudget);
  EXPECT_TRUE(a.capped);
  EXPECT_EQ(*a.keyspace, cipher_keyspace(256));
  EXPECT_EQ(a.duration_text, "3.67174306×10^57 years");
  EXPECT_EQ(a.verdict, Verdict::secure);
}

TEST(AssessComponent, DescriptiveHasNoNumbers) {
  const auto a = assess_component(descriptive("d", Layer::authentication, "LEAP"), kAsic, kBudget);
  EXPECT_FALSE(a.keyspace);
  EXPECT_FALSE(a.duration);
  EXPECT_FALSE(a.verdict);
  EXPECT_EQ(a.kind, "descriptive");
}

TEST(WeakestLink, PassphraseUnderWpa2) {
  const SecurityStack stack({cipher("wpa2", "WPA2", 256),
                             passphrase("psk", "alphanumeric", 8, CipherSpec::named("WPA2", 256))},
                            kAsic, kBudget);
  const auto r = weakest_link(stack);
  EXPECT_EQ(r.weakest_id, "psk");
  EXPECT_EQ(r.overall, Verdict::insecure);
  EXPECT_EQ(r.assessments.front().duration_text, "3.63900176 minutes");
  ASSERT_TRUE(r.recommendation.charset);
  EXPECT_EQ(r.recommendation.charset->integer_ceiling, BigCount(481));
  EXPECT_FALSE(r.recommendation.charset->named_set);
  EXPECT_NE(r.recommendation.text.find("completely randomly"), std::string::npos);
}

TEST(WeakestLink, Wep40CipherBelowDigitPassphrase) {
  const SecurityStack stack({passphrase("pin", "digits", 13), cipher("wep", "WEP", 40)}, kAsic, kBudget);
  const auto r = weakest_link(stack);
  EXPECT_EQ(r.weakest_id, "wep");
  EXPECT_EQ(r.assessments[0].duration_text, "1.09951163 seconds");
  EXPECT_EQ(r.assessments[1].duration_text, "10 seconds");
  EXPECT_FALSE(r.recommendation.charset);
}

TEST(WeakestLink, SingleCipher) {
  const auto r = weakest_link(SecurityStack({cipher("wpa2", "WPA2", 256)}, kAsic, kBudget));
  EXPECT_EQ(r.weakest_id, "wpa2");
  EXPECT_EQ(r.overall, Verdict::secure);
}

TEST(WeakestLink, TiesKeepDeclarationOrder) {
  // 16^10 == 2^40.
  const SecurityStack a({passphrase("hex", "hexadecimal", 10), cipher("wep", "WEP", 40)}, kAsic, kBudget);
  EXPECT_EQ(weakest_link(a).weakest_id, "hex");
  const SecurityStack b({cipher("wep", "WEP", 40), passphrase("hex", "hexadecimal", 10)}, kAsic, kBudget);
  EXPECT_EQ(weakest_link(b).weakest_id, "wep");
}

TEST(WeakestLink, DescriptiveAppendedUnranked) {
  const SecurityStack stack({descriptive("radius", Layer::access_control, "RADIUS"),
                             cipher("wpa2", "WPA2", 256),
                             descriptive("tls", Layer::authentication, "TLS")},
                            kAsic, kBudget);
  const auto r = weakest_link(stack);
  ASSERT_EQ(r.assessments.size(), 3u);
  EXPECT_EQ(r.assessments[0].component_id, "wpa2");
  EXPECT_EQ(r.assessments[1].component_id, "radius");
  EXPECT_EQ(r.assessments[2].component_id, "tls");
  EXPECT_EQ(r.weakest_id, "wpa2");
}

TEST(WeakestLink, SecurePassphraseStillGetsCharsetAdvice) {
  const SecurityStack stack({cipher("wpa2", "WPA2", 256), passphrase("psk", "lowercase", 16)},
                            kAsic, kBudget);
  const auto r = weakest_link(stack);
  EXPECT_EQ(r.weakest_id, "psk");
  EXPECT_EQ(r.overall, Verdict::secure);
  ASSERT_TRUE(r.recommendation.charset);
  EXPECT_EQ(r.recommendation.charset->named_set->name(), "lowercase");
}

TEST(SecurityStack, RejectsDuplicatesAndDescriptiveOnly) {
  EXPECT_THROW(SecurityStack({cipher("x", "WEP", 40), cipher("x", "WPA2", 256)}, kAsic, kBudget),
               InvalidSpec);
  EXPECT_THROW(SecurityStack({descriptive("tls", Layer::authentication, "TLS")}, kAsic, kBudget),
               InvalidSpec);
}

TEST(RecommendMinCharset, Length16) {
  const auto r = recommend_min_charset(16, kBudget, kAsic);
  EXPECT_NEAR(static_cast<double>(r.real_value), 21.9153867, 1e-6);
  EXPECT_EQ(r.integer_ceiling, BigCount(22));
  ASSERT_TRUE(r.named_set);
  EXPECT_EQ(r.named_set->name(), "lowercase");
}

TEST(RecommendMinCharset, Length8HasNoNamedSet) {
  const auto r = recommend_min_charset(8, kBudget, kAsic);
  EXPECT_NEAR(static_cast<double>(r.real_value), 480.284174, 1e-5);
  EXPECT_EQ(r.integer_ceiling, BigCount(481));
  EXPECT_FALSE(r.named_set);
}

TEST(RecommendMinCharset, Length63IsDigits) {
  const auto r = recommend_min_charset(63, kBudget, kAsic);
  EXPECT_NEAR(static_cast<double>(r.real_value), 2.19032075, 1e-7);
  EXPECT_EQ(r.integer_ceiling, BigCount(3));
  EXPECT_EQ(r.named_set->name(), "digits");
}

TEST(RecommendMinCharset, RejectsZeroLength) {
  EXPECT_THROW(recommend_min_charset(0, kBudget, kAsic), InvalidSpec);
}

}  // namespace
}  // namespace weaklink
