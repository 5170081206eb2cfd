#include <gtest/gtest.h>

#include <string>

#include "pflc/error.hpp"
#include "workspace.hpp"

namespace pflc::cli {
namespace {

const std::string kExamples = PFLC_EXAMPLES_DIR;

ErrorCode code_of(const std::string& text) {
  try {
    parse_workspace_text(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::DomainError;
}

std::string message_of(const std::string& text) {
  try {
    parse_workspace_text(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

TEST(Workspace, RoundTripKeepsDigest) {
  for (const char* name : {"reproductive.json", "dose_response.json", "continuous.json"}) {
    const Workspace ws = load_workspace(kExamples + "/" + name);
    const std::string text = serialize_workspace(ws);
    const Workspace again = parse_workspace_text(text);
    EXPECT_EQ(ws.digest(), again.digest()) << name;
    EXPECT_EQ(text, serialize_workspace(again)) << name;
    EXPECT_EQ(ws.digest().size(), 16u);
  }
}

TEST(Workspace, IntervalTableExpansion) {
  const Workspace ws = load_workspace(kExamples + "/reproductive.json");
  const DiscreteDist& days = ws.space("days");
  ASSERT_EQ(days.size(), 201u);
  EXPECT_EQ(days.prob_at(200), 0.0);
  EXPECT_NEAR(days.prob_at(57), 0.005, 1e-15);
  EXPECT_NEAR(days.prob_at(95), 0.0135, 1e-15);
  EXPECT_EQ(ws.attribute("normal").base, 200.0);

  const auto d = expand_interval_table({{5, 10, 0.5}, {15, 10, 0.5}});
  EXPECT_EQ(d.size(), 20u);
  EXPECT_NEAR(d.prob_at(0), 0.05, 1e-15);
}

TEST(Workspace, MassMustSumToOne) {
  EXPECT_EQ(code_of(R"({"spaces": {"s": {"pmf": [[0, 0.5], [1, 0.4]]}}})"), ErrorCode::ValidationError);
}

TEST(Workspace, ImproperBaseIsRejected) {
  const std::string text = R"({"spaces": {"s": {"pmf": [[0, 0.5], [1, 0.5]]}},
    "attributes": {"a": {"space": "s", "breakpoints": [[0, 0.2], [1, 1]], "base": 0}}})";
  EXPECT_EQ(code_of(text), ErrorCode::ValidationError);
  EXPECT_NE(message_of(text).find("proper"), std::string::npos) << message_of(text);
}

TEST(Workspace, ParseErrorsCarryLocation) {
  const std::string broken = "{\n  \"spaces\": {\n    \"s\": {\"pmf\": [[0, 1]]\n  }\n";
  EXPECT_EQ(code_of(broken), ErrorCode::ParseError);
  EXPECT_NE(message_of(broken).find("line "), std::string::npos) << message_of(broken);

  const std::string field = R"({"spaces": {"s": {"pmf": [[0, "x"]]}}})";
  EXPECT_EQ(code_of(field), ErrorCode::ParseError);
  EXPECT_NE(message_of(field).find("spaces/s"), std::string::npos) << message_of(field);

  EXPECT_EQ(code_of(R"({"bogus": {}})"), ErrorCode::ParseError);
}

TEST(Workspace, DefaultBases) {
  const Workspace ws = load_workspace(kExamples + "/dose_response.json");
  EXPECT_EQ(ws.attribute("low").base, 9.0);
  EXPECT_EQ(ws.attribute("medium").base, 0.0);
  EXPECT_EQ(ws.attribute("high").base, 0.0);
  EXPECT_EQ(ws.experiments.at("dose_response").n_units, 10000u);
}

TEST(Workspace, MissingFile) {
  try {
    load_workspace("/nonexistent/ws.json");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

}  // namespace
}  // namespace pflc::cli
