#include <doctest.h>

#include <json.hpp>

#include "binf/error.hpp"
#include "binf/io.hpp"
#include "binf/report.hpp"
#include "support.hpp"

using namespace binf;
using nlohmann::json;

TEST_CASE("row parsing") {
  const auto expected = std::vector<Row>{{Letter{1}, Letter{1}, Letter{-2}}, {Letter{2}}};
  CHECK(parse_rows("1,1,-2\n2\n") == expected);
  CHECK(parse_rows("1 1 -2 ; 2") == expected);
  CHECK(parse_rows("[1, 1, -2] / [2]") == expected);
  CHECK(parse_rows("# comment\n\n1,1,-2   # trailing\n2") == expected);
  CHECK(parse_rows("2/*/0") == std::vector<Row>{{Letter{2}}, {}, {Letter{0}}});
  CHECK_THROWS_AS(parse_rows("1,x"), Error);
  CHECK_THROWS_AS(parse_rows("1,--2"), Error);
  CHECK(parse_int_list("3, 2 ,3") == std::vector<int>{3, 2, 3});
  CHECK(parse_int_list("[1 2]") == std::vector<int>{1, 2});
  CHECK(format_row({}) == "*");
  CHECK(format_row({Letter{1}, Letter{-3}}) == "1,-3");
}

TEST_CASE("(1-u) rendering") {
  CHECK(one_minus_u_string(IntPoly{1}) == "1");
  CHECK(one_minus_u_string(IntPoly{1, -1}) == "(1-u)");
  CHECK(one_minus_u_string(IntPoly{2, -3, 1}) == "(1-u) + (1-u)^2");
  CHECK(one_minus_u_string(IntPoly{}) == "0");
}

TEST_CASE("tableau report") {
  KostantBijection bij(LieType::parse("B3"));
  const Tableau t = binf::test::load_tableau(bij.crystal(), "b3_segments.txt");
  CHECK(tableau_report(bij, t, TableauQuery::Seg, Format::Text) == "seg'=8\ne_B=2\nseg=6\n");
  CHECK(tableau_report(bij, t, TableauQuery::Xi, Format::Text) ==
        "xi = 2(a1) + 7(a1+a2+a3) + (a1+a2+2a3) + 2(a2) + 4(a2+a3) + 3(a3)\n");
  CHECK(tableau_report(bij, t, TableauQuery::Content, Format::Text) == "content=19\n");
  const json j = json::parse(tableau_report(bij, t, TableauQuery::All, Format::Json));
  CHECK(j["seg"]["seg"] == 6);
  CHECK(j["seg"]["e_B"] == 2);
  CHECK(j["weight"] == std::vector<int>{-10, -14, -16});
  CHECK(j["content"] == 19);
  CHECK(j["reduced"] == "2,2,0,-3,-1,-1,-1/3,3,-2,-2/0,-3");
  CHECK_THROWS_AS(tableau_report(bij, t, TableauQuery::Seg, Format::Dot), Error);
}

TEST_CASE("graph report formats") {
  KostantBijection bij(LieType::parse("G2"));
  const json j = json::parse(graph_report(bij, 3, Format::Json));
  CHECK(j["nodes"].size() == 14);
  CHECK(j["edges"].size() == 14);
  CHECK(j["nodes"][0]["reduced"] == "*/*");
  const std::string dot = graph_report(bij, 1, Format::Dot);
  CHECK(dot.rfind("digraph T {", 0) == 0);
  CHECK(dot.find("[label=\"*/3\"]") != std::string::npos);
  CHECK(graph_report(bij, 3, Format::Json) == graph_report(bij, 3, Format::Json, 2));
}

TEST_CASE("GK report") {
  const GkReport r = verify_gk(LieType::parse("A2"), 3);
  const std::string text = gk_report(r, Format::Text);
  CHECK(text.rfind("GK A2 height<=3 word (1,2,1): OK", 0) == 0);
  CHECK(text.find("[1,1]  2 - 3u + u^2  =  (1-u) + (1-u)^2") != std::string::npos);
  const json j = json::parse(gk_report(r, Format::Json));
  CHECK(j["ok"] == true);
  CHECK(j["discrepancies"].empty());
}

TEST_CASE("symmetric-function reports") {
  SymFunc a2(LieType::parse("A2"));
  CHECK(qkostant_report(a2, WeightVector{1, 0}, Format::Text).find("not in the root lattice") != std::string::npos);
  const json k = json::parse(kostka_report(a2, WeightVector{1, 1}, WeightVector{0, 0}, Format::Json));
  CHECK(k["poly"]["coeffs"] == std::vector<int>{0, 1, 1});
  CHECK(k["multiplicity"] == 2);
}
