#include "doctest.h"

#include "snc/verify.hpp"

#include <fstream>
#include <sstream>

using namespace snc;

namespace {
std::string fixture_dir() { return SNC_FIXTURE_DIR; }

std::string slurp(const std::string& name) {
  std::ifstream in(fixture_dir() + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const CheckResult* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

const char* one_case = R"({"cases": [
  {"id": "Y1b", "center": -1, "twigs": [[3], [3], [2, 2]], "d": "nonzero", "type": "Y{3,3,3}",
   "provenance": "published", "anchor": "ANCHOR"}
]})";

std::string with_anchor(const std::string& anchor, const std::string& prov = "published") {
  std::string s = one_case;
  s.replace(s.find("ANCHOR"), 6, anchor);
  s.replace(s.find("published"), 9, prov);
  return s;
}
}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("bundled scenarios pass") {
    Report r = run_all(fixture_dir());
    INFO(r.to_text());
    CHECK(r.checks.size() > 150);
    CHECK(r.passed());
  }

  TEST_CASE("report formats") {
    Report r = run_scenario("y244", fixture_dir());
    std::string text = r.to_text();
    CHECK(text.find("CHECK rank of NS: PASS") != std::string::npos);
    CHECK(text.find("SUMMARY") != std::string::npos);
    CHECK(r.to_json().find("\"checks\"") != std::string::npos);
  }

  TEST_CASE("dropping a blow-up breaks the canonical check") {
    std::string arr = slurp("y333.arr");
    auto pos = arr.find("blowup L2pp");
    REQUIRE(pos != std::string::npos);
    arr.erase(pos, arr.find('\n', pos) - pos + 1);
    Report r = run_scenario_text(slurp("y333.json"), arr);
    const CheckResult* c = find_check(r, "K+D# class");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->pass);
    CHECK_FALSE(r.passed());
  }

  TEST_CASE("a wrong expected value fails") {
    std::string js = slurp("y244.json");
    auto pos = js.find("\"-32\"");
    REQUIRE(pos != std::string::npos);
    js.replace(pos, 5, "\"-31\"");
    Report r = run_scenario_text(js, slurp("y244.arr"));
    const CheckResult* c = find_check(r, "d(D)");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->pass);
    CHECK(c->actual == "-32");
  }

  TEST_CASE("case table entries need an anchor and a known provenance") {
    CHECK(run_case_table_text(with_anchor("T1=[3], T2=[3], T3=[2,2]")).passed());
    CHECK_THROWS_AS(run_case_table_text(with_anchor("")), ParseError);
    CHECK_THROWS_AS(run_case_table_text(with_anchor("x", "rumoured")), ParseError);
    std::string missing = with_anchor("x");
    auto pos = missing.find(", \"anchor\"");
    missing.erase(pos, missing.find('}', pos) - pos);
    CHECK_THROWS_AS(run_case_table_text(missing), ParseError);
    CHECK_THROWS_AS(run_case_table_text("{not json"), ParseError);
  }

  TEST_CASE("fork helpers") {
    DualGraph g = fork_graph(-1, {{2, 2, 2}, {2}, {2, 2, 2}});
    CHECK(describe_shape(g) == "fork B(-1) [2] [2,2,2] [2,2,2]");
    CHECK(g.has_vertex("T1_1"));
    CHECK(g.has_vertex("T2"));
    DualGraph c = graph_of_chain(chain_from_bracket({3, 2}));
    CHECK(describe_shape(c) == "chain [2,3]");
  }
}
