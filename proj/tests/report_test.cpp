#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "z4poset/report.hpp"

using namespace z4poset;

namespace {

std::vector<AnalysisReport> sample_reports() {
  return {
      analyze(OrderIdealSpec::chain_one(2, 2, 2), {true, false, 1}),
      analyze(OrderIdealSpec::union_of(3, 1, 1, 2), {true, false, 1}),
      analyze(OrderIdealSpec::chain_two(5, 2, 4)),
      analyze(OrderIdealSpec::union_of(6, 3, 2, 5), {true, true, 2}),
      analyze(OrderIdealSpec::chain_one(20, 7, 5)),
  };
}

}  // namespace

TEST(Analyze, SmallExampleReport) {
  const auto r = analyze(OrderIdealSpec::chain_one(2, 2, 2), {true, false, 1});
  EXPECT_EQ(r.length, 4U);
  EXPECT_EQ(r.size, 8U);
  EXPECT_EQ(r.kernel_size, 2U);
  EXPECT_EQ(r.quaternary, (QuaternaryParams{4, 8, 4}));
  ASSERT_TRUE(r.gray.has_value());
  EXPECT_TRUE(r.gray->is_linear);
  EXPECT_EQ(binary_params_string(*r.gray), "[8,3,4]");
  EXPECT_EQ(quaternary_params_string(r.quaternary), "(4, 8, 4)_L");
  EXPECT_TRUE(r.methods.brute_force);
  EXPECT_TRUE(r.methods.fast_path);
  EXPECT_TRUE(r.methods.agree);
}

TEST(Analyze, NonlinearReport) {
  const auto r = analyze(OrderIdealSpec::union_of(3, 1, 1, 2), {true, false, 1});
  EXPECT_EQ(quaternary_params_string(r.quaternary), "(32, 64, 32)_L");
  ASSERT_TRUE(r.gray.has_value());
  EXPECT_FALSE(r.gray->is_linear);
  EXPECT_EQ(binary_params_string(*r.gray), "(64, 64, 32)");
}

TEST(Analyze, LargeDimensionUsesClosedFormOnly) {
  const auto r = analyze(OrderIdealSpec::chain_one(20, 7, 5));
  EXPECT_TRUE(r.methods.closed_form);
  EXPECT_FALSE(r.methods.brute_force);
  EXPECT_FALSE(r.methods.fast_path);
  EXPECT_FALSE(r.methods.enumerated_size);
  EXPECT_EQ(r.length, code_length(r.spec));
  EXPECT_EQ(r.size, std::uint64_t{1} << 40);
}

TEST(Analyze, VerifyBeyondCapThrows) {
  EXPECT_THROW(analyze(OrderIdealSpec::chain_one(11, 11, 3), {false, true, 1}), CapacityError);
}

TEST(Analyze, VerifyRunsBruteForce) {
  const auto r = analyze(OrderIdealSpec::chain_one(8, 5, 3), {false, true, 2});
  EXPECT_TRUE(r.methods.brute_force);
  EXPECT_TRUE(r.methods.agree);
  EXPECT_FALSE(analyze(OrderIdealSpec::chain_one(8, 5, 3)).methods.brute_force);
}

TEST(Analyze, InvalidSpecThrows) {
  EXPECT_THROW(analyze(OrderIdealSpec::chain_two(3, 3, 4)), ParameterError);
}

TEST(Json, SchemaKeys) {
  const auto j = to_json(analyze(OrderIdealSpec::chain_one(2, 2, 2), {true, false, 1}));
  for (const char* key : {"n", "m", "ideal", "length", "size", "kernel_size", "lee_multiplicity", "lee_distinct",
                          "quaternary_params", "gray", "methods"})
    EXPECT_TRUE(j.contains(key)) << key;
  for (const char* key : {"kind", "i", "j"}) EXPECT_TRUE(j["ideal"].contains(key)) << key;
  for (const char* key : {"binary_length", "binary_size", "min_distance", "linear", "witness"})
    EXPECT_TRUE(j["gray"].contains(key)) << key;
  EXPECT_EQ(j["ideal"]["kind"], "chain-one");
  EXPECT_TRUE(j["ideal"]["j"].is_null());
  EXPECT_EQ(j["lee_distinct"], nlohmann::json::parse("[[0,1],[4,6],[8,1]]"));
  EXPECT_EQ(j["quaternary_params"], nlohmann::json::parse("[4,8,4]"));
  EXPECT_TRUE(j["gray"]["witness"].is_null());
}

TEST(Json, RoundTrip) {
  for (const auto& r : sample_reports()) {
    const auto back = report_from_json(nlohmann::json::parse(to_json(r).dump()));
    EXPECT_EQ(back, r) << r.spec.describe();
  }
}

TEST(Text, RoundTrip) {
  for (const auto& r : sample_reports()) EXPECT_EQ(parse_text(to_text(r)), r) << r.spec.describe();
}

TEST(Text, SameFactsAsJson) {
  for (const auto& r : sample_reports())
    EXPECT_EQ(parse_text(to_text(r)), report_from_json(to_json(r))) << r.spec.describe();
}

TEST(Text, RejectsInconsistentParams) {
  auto text = to_text(analyze(OrderIdealSpec::chain_one(2, 2, 2), {true, false, 1}));
  const auto pos = text.find("[8,3,4]");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 7, "[8,3,5]");
  EXPECT_THROW(parse_text(text), ParameterError);
  EXPECT_THROW(parse_text("bogus line\n"), ParameterError);
  EXPECT_THROW(parse_text("unknown_key: 1\n"), ParameterError);
}
