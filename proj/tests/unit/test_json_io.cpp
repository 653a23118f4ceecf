#include <gtest/gtest.h>

#include "ltsenv/catalog.hpp"
#include "ltsenv/json_io.hpp"
#include "ltsenv/report.hpp"

using namespace ltsenv;
using nlohmann::json;

TEST(JsonIo, ScalarPairs) {
  EXPECT_EQ(scalar_to_json(Scalar(-3, 4)), json::parse("[-3, 4]"));
  EXPECT_EQ(scalar_to_json(Scalar(0)), json::parse("[0, 1]"));
  const Scalar big = parse_scalar("123456789012345678901234567891/7");
  const json j = scalar_to_json(big);
  EXPECT_TRUE(j[0].is_string());
  EXPECT_EQ(j[1], 7);
  EXPECT_EQ(scalar_from_json(j), big);
  EXPECT_EQ(scalar_from_json(json::parse("[\"-10\", 4]")), Scalar(-5, 2));
  EXPECT_THROW(scalar_from_json(json::parse("[1, 0]")), InputError);
  EXPECT_THROW(scalar_from_json(json::parse("[1.5, 2]")), InputError);
  EXPECT_THROW(scalar_from_json(json::parse("[\"1x\", 2]")), InputError);
}

TEST(JsonIo, TernaryRoundTrip) {
  for (const auto& t : catalog::standard_lts()) {
    const json j = to_json(t);
    EXPECT_EQ(ternary_system_from_json(j), t) << t.label();
    EXPECT_EQ(to_json(ternary_system_from_json(j)).dump(), j.dump());
  }
  const auto m = catalog::octonion_malcev();
  EXPECT_EQ(ternary_system_from_json(to_json(m)), m);
}

TEST(JsonIo, TernaryErrors) {
  auto parse = [](const char* text) { return ternary_system_from_json(json::parse(text)); };
  EXPECT_THROW(parse("[]"), InputError);
  EXPECT_THROW(parse("{}"), InputError);
  EXPECT_THROW(parse(R"({"dim": -1})"), InputError);
  EXPECT_THROW(parse(R"({"dim": 2, "ternary": [[0, 1, 2, 0, 1, 1]]})"), InputError);
  EXPECT_THROW(parse(R"({"dim": 2, "ternary": [[0, 1, 0, 0, 1]]})"), InputError);
  EXPECT_THROW(parse(R"({"dim": 2, "ternary": [[0, 1, 0, 0, 1, 1], [0, 1, 0, 0, 1, 1]]})"), InputError);
  EXPECT_THROW(parse(R"({"dim": 2, "binary": [[0, 1, 0, 1, 0]]})"), InputError);
  EXPECT_THROW(parse(R"({"dim": 2, "names": ["a"]})"), InputError);
  try {
    parse(R"({"dim": 2, "ternary": [[0, 1, 0, 0, 1, 1], [0, 1, 0, 5, 1, 1]]})");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("$.ternary[1]"), std::string::npos);
  }
  EXPECT_EQ(parse(R"({"dim": 0})").dim(), 0u);
}

TEST(JsonIo, MalformedTextReportsOffset) {
  try {
    parse_json_text("{\"dim\": 2,, }", "input.json");
    FAIL();
  } catch (const InputError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("input.json"), std::string::npos);
    EXPECT_NE(msg.find("byte 11"), std::string::npos);
  }
}

TEST(JsonIo, AlgebraRoundTrip) {
  for (const char* name : {"truncated:3", "FxF", "idempotent", "mat2", "octonions", "nonassoc3"}) {
    const auto a = algebras::by_name(name);
    EXPECT_EQ(fin_algebra_from_json(to_json(a)), a) << name;
  }
  EXPECT_THROW(fin_algebra_from_json(json::parse(R"({"dim": 2, "table": []})")), InputError);
  // e_0 is not a unit of the zero table
  EXPECT_THROW(fin_algebra_from_json(json::parse(R"({"dim": 2, "unit": 0, "table": []})")), InputError);
  EXPECT_THROW(fin_algebra_from_json(json::parse(R"({"dim": 1, "unit": 1, "table": []})")), InputError);
}

TEST(JsonIo, UvElements) {
  EnvelopeSession s(catalog::s2());
  const auto u = s.monomial(Word{0, 1}, Scalar(2, 3)) - s.one();
  const json j = to_json(u);
  EXPECT_EQ(j, json::parse("[[[], [-1, 1]], [[0, 1], [2, 3]]]"));
  EXPECT_EQ(uv_element_from_json(s, j), u);
  EXPECT_THROW(uv_element_from_json(s, json::parse("[[[1, 0], [1, 1]]]")), InputError);
  EXPECT_THROW(uv_element_from_json(s, json::parse("[[[2], [1, 1]]]")), InputError);
}

TEST(ReportTest, SerializationIsStable) {
  Report r;
  r.command = "verify";
  r.system = "S2";
  r.fields["dim"] = 3;
  r.fields["value"] = scalar_to_json(Scalar(1, 2));
  r.add("first", true);
  r.add("second", false, {{"n", 2}});
  EXPECT_FALSE(r.ok());
  const std::string a = r.to_json().dump();
  EXPECT_EQ(a, r.to_json().dump());
  EXPECT_EQ(a.find("timing_ms"), std::string::npos);
  EXPECT_EQ(a,
            R"({"checks":[{"name":"first","pass":true,"witness":null},{"name":"second","pass":false,"witness":{"n":2}}],)"
            R"("command":"verify","dim":3,"system":"S2","value":[1,2]})");
  r.timing_ms = 5;
  EXPECT_EQ(r.to_json()["timing_ms"], 5);
  const std::string text = r.to_text();
  EXPECT_NE(text.find("[PASS] first"), std::string::npos);
  EXPECT_NE(text.find("[FAIL] second  {\"n\":2}"), std::string::npos);
  EXPECT_NE(text.find("1 of 2 checks failed"), std::string::npos);
}
