#include <doctest.h>

#include <json.hpp>

#include "tautcalc/expand.hpp"
#include "tautcalc/expr_parser.hpp"
#include "tautcalc/json_io.hpp"
#include "tautcalc/loci.hpp"

using namespace tautcalc;

namespace {

std::string hex(const std::string& bytes) {
  std::string out;
  char buf[3];
  for (unsigned char c : bytes) {
    std::snprintf(buf, sizeof buf, "%02x", c);
    out += buf;
  }
  return out;
}

}  // namespace

TEST_SUITE("json") {

TEST_CASE("class round trip") {
  const TautClass x = loci::hyp22_strata_form();
  const std::string text = json::dump_class(x);
  CHECK(json::parse_class(text) == x);
  CHECK(json::dump_class(json::parse_class(text)) == text);  // stable ordering
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["space"]["g"] == 2);
  CHECK(doc["space"]["n"] == 2);
  for (const auto& t : doc["terms"]) {
    const std::string c = t["coeff"];
    CHECK(c.find('/') != std::string::npos);
  }
}

TEST_CASE("graph round trip") {
  const StableGraph g({1, 0}, {1, 1}, {{0, 1}, {0, 1}});
  CHECK(json::parse_graph(json::dump_graph(g)) == g);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(json::parse_class("{"), std::invalid_argument);
  CHECK_THROWS_AS(json::parse_class(R"({"space":{"g":0,"n":2},"terms":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(json::parse_graph(R"({"vertices":[{"genus":0}],"legs":[],"edges":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(json::parse_graph(R"({"vertices":[{"genus":1}],"legs":[{"marking":2,"vertex":0}],"edges":[]})"),
                  std::invalid_argument);
}

TEST_CASE("strata listing") {
  auto count = [](MarkedSpace s, int c, bool d) { return nlohmann::json::parse(json::dump_strata(s, c, d))["count"].get<int>(); };
  CHECK(count({2, 0}, 1, false) == 2);
  CHECK(count({2, 2}, 2, false) == 13);
  CHECK_THROWS_AS(json::dump_strata({1, 0}, 0, false), std::invalid_argument);
  CHECK_THROWS_AS(json::dump_strata({2, 0}, 4, false), std::invalid_argument);

  const auto doc = nlohmann::json::parse(json::dump_strata({2, 2}, 2, false));
  std::set<std::string> codes;
  for (const auto& s : doc["strata"]) codes.insert(s["code"].get<std::string>());
  for (auto s : {loci::Stratum22::D11, loci::Stratum22::D00, loci::Stratum22::Gamma0})
    CHECK(codes.count(hex(canonicalize(loci::stratum22_graph(s)).code)) == 1);
}

TEST_CASE("decorated top-degree strata integrate consistently") {
  const MarkedSpace k21{2, 1};
  const auto doc = nlohmann::json::parse(json::dump_strata(k21, 4, true));
  std::map<std::string, Rational> integral;
  for (const auto& s : doc["strata"]) integral[s["code"]] = parse_rational(s["integral"].get<std::string>());
  // the listed integrals reproduce the integral of an expanded class term by term
  const TautClass x = expand(parse_expr("la*psi1^3 + dirr*d1*psi1^2 - 2*om1^4", k21), k21);
  Rational via_list;
  for (const auto& [code, t] : x.terms()) {
    REQUIRE(integral.count(hex(code)) == 1);
    via_list += t.coeff * integral[hex(code)];
  }
  CHECK(via_list == integrate(x));
  CHECK(integral.at(hex(canonicalize(DecoratedStratum(StableGraph::smooth(k21), {4}, {{}})).code)) == Rational(1, 1152));
}

TEST_CASE("report") {
  VerificationReport r;
  r.name = "x";
  r.pass = false;
  r.witnesses = {"w"};
  const auto doc = nlohmann::json::parse(json::dump_report(r));
  CHECK(doc["verdict"] == "fail");
  CHECK(doc["witnesses"].size() == 1);
}

}  // TEST_SUITE
