#include <doctest.h>

#include <set>
#include <tuple>

#include "binf/error.hpp"
#include "binf/io.hpp"
#include "binf/tableau.hpp"
#include "support.hpp"

using namespace binf;
using binf::test::tableau_of;

namespace {

using LabelEdge = std::tuple<std::string, int, std::string>;

std::set<LabelEdge> labelled_edges(const TInfinity& c, const CrystalGraph& g) {
  std::set<LabelEdge> out;
  for (const auto& e : g.edges) out.insert({reduced_label(c, g.nodes[e.from]), e.i, reduced_label(c, g.nodes[e.to])});
  return out;
}

std::set<std::string> labels(const TInfinity& c, const CrystalGraph& g) {
  std::set<std::string> out;
  for (const auto& t : g.nodes) out.insert(reduced_label(c, t));
  return out;
}

bool has_violation(const TInfinity& c, const std::string& text, int row, const std::string& fragment) {
  for (const auto& v : c.violations(parse_rows(text)))
    if (v.row == row && v.message.find(fragment) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("highest weight element") {
  for (const char* name : binf::test::kAcceptanceTypes) {
    CAPTURE(name);
    TInfinity c(LieType::parse(name));
    const Tableau h = c.highest();
    CHECK(c.weight(h).is_zero());
    for (int i = 1; i <= c.root_system().rank(); ++i) {
      CHECK_FALSE(c.e(h, i).has_value());
      CHECK(c.eps(h, i) == 0);
    }
    for (const auto& row : c.reduced_form(h)) CHECK(row.empty());
  }
  TInfinity d4(LieType::parse("D4"));
  CHECK(d4.num_rows() == 3);
  CHECK(format_rows(d4.highest().rows()) == "1,1,1\n2,2\n3\n");
  TInfinity g2(LieType::parse("G2"));
  CHECK(format_rows(g2.highest().rows()) == "1,1\n2\n");
}

TEST_CASE("B3 graph to depth 2") {
  TInfinity c(LieType::parse("B3"));
  const CrystalGraph g = c.graph(2);
  CHECK(g.nodes.size() == 12);
  CHECK(labels(c, g) == std::set<std::string>{"*/*/*", "2/*/*", "*/3/*", "*/*/0", "2,2/*/*", "3/*/*", "2/*/0",
                                              "2/3/*", "*/3,3/*", "*/0/*", "*/3/0", "*/*/-3"});
  CHECK(labelled_edges(c, g) == std::set<LabelEdge>{{"*/*/*", 1, "2/*/*"},
                                                   {"*/*/*", 2, "*/3/*"},
                                                   {"*/*/*", 3, "*/*/0"},
                                                   {"2/*/*", 1, "2,2/*/*"},
                                                   {"2/*/*", 2, "3/*/*"},
                                                   {"2/*/*", 3, "2/*/0"},
                                                   {"*/3/*", 1, "2/3/*"},
                                                   {"*/3/*", 2, "*/3,3/*"},
                                                   {"*/3/*", 3, "*/0/*"},
                                                   {"*/*/0", 1, "2/*/0"},
                                                   {"*/*/0", 2, "*/3/0"},
                                                   {"*/*/0", 3, "*/*/-3"}});
}

TEST_CASE("G2 graph to depth 3") {
  TInfinity c(LieType::parse("G2"));
  const CrystalGraph g = c.graph(3);
  CHECK(g.nodes.size() == 14);
  CHECK(labelled_edges(c, g) == std::set<LabelEdge>{{"*/*", 1, "2/*"},
                                                   {"*/*", 2, "*/3"},
                                                   {"2/*", 1, "2,2/*"},
                                                   {"2/*", 2, "3/*"},
                                                   {"*/3", 1, "2/3"},
                                                   {"*/3", 2, "*/3,3"},
                                                   {"2,2/*", 1, "2,2,2/*"},
                                                   {"2,2/*", 2, "2,3/*"},
                                                   {"3/*", 1, "0/*"},
                                                   {"3/*", 2, "3/3"},
                                                   {"2/3", 1, "2,2/3"},
                                                   {"2/3", 2, "2/3,3"},
                                                   {"*/3,3", 1, "2/3,3"},
                                                   {"*/3,3", 2, "*/3,3,3"}});
}

TEST_CASE("threaded exploration matches the serial one") {
  TInfinity c(LieType::parse("C3"));
  const CrystalGraph a = c.graph(5);
  const CrystalGraph b = c.graph(5, TInfinity::kDefaultNodeLimit, 4);
  CHECK(a.nodes == b.nodes);
  CHECK(a.depth == b.depth);
  CHECK(labelled_edges(c, a) == labelled_edges(c, b));
  CHECK_THROWS_AS(c.graph(5, 10), Error);
}

TEST_CASE("D4 operators on the two-bar tableau") {
  TInfinity c(LieType::parse("D4"));
  const Tableau t = binf::test::load_tableau(c, "d4_two_bars.txt");
  CHECK(c.weight(t) == RootVector{-10, -12, -8, -10});
  std::vector<int> eps, phi;
  for (int i = 1; i <= 4; ++i) {
    eps.push_back(c.eps(t, i));
    phi.push_back(c.phi(t, i));
  }
  CHECK(eps == std::vector<int>{5, 0, 4, 6});
  CHECK(phi == std::vector<int>{-3, 4, 0, -2});

  const auto e1 = c.e(t, 1);
  REQUIRE(e1.has_value());
  CHECK(format_rows(e1->rows()) ==
        "1,1,1,1,1,1,1,1,1,2,-3,-3,-1,-1,-1\n2,2,2,2,3,-4,-3,-3\n3,-4,-3\n");
  CHECK(format_rows(c.f(t, 4).rows()) ==
        "1,1,1,1,1,1,1,1,1,1,2,2,-3,-3,-1,-1,-1\n2,2,2,2,2,3,-4,-3,-3\n3,-4,-4,-3\n");
  CHECK_FALSE(c.e(t, 2).has_value());

  const Tableau one = binf::test::load_tableau(c, "d4_segments.txt");
  CHECK(format_rows(c.reduced_form(one)) == "2,2,-3,-1,-1,-1\n3,-4,-3,-3\n-4,-3\n");
}

TEST_CASE("reduced form round trip") {
  for (const char* name : binf::test::kAcceptanceTypes) {
    CAPTURE(name);
    TInfinity c(LieType::parse(name));
    for (const auto& t : c.enumerate(4)) CHECK(c.from_reduced(c.reduced_form(t)) == t);
  }
  TInfinity b3(LieType::parse("B3"));
  CHECK(b3.from_reduced(parse_rows(binf::test::slurp(binf::test::data_path("b3_segments_reduced.txt")))) ==
        binf::test::load_tableau(b3, "b3_segments.txt"));
}

TEST_CASE("validation reports each broken condition") {
  TInfinity b3(LieType::parse("B3"));
  CHECK(b3.violations(parse_rows("1,1,1/2,2/3")).empty());
  CHECK(has_violation(b3, "1,1,1/2,2", 0, "exactly 3 rows"));
  CHECK(has_violation(b3, "1,1,1/2,2/4", 3, "not in the alphabet"));
  CHECK(has_violation(b3, "1,1,1/2,2/2", 3, "first column"));
  CHECK(has_violation(b3, "1,1,1,-1/2,2,1/3", 2, "not allowed in row 2"));
  CHECK(has_violation(b3, "1,1,1,3,2/2,2/3", 1, "weakly increasing"));
  CHECK(has_violation(b3, "1,1,1/2,2,2,2/3", 2, "longer than the row above"));
  CHECK(has_violation(b3, "1,1,2/2,2/3", 1, "marginal largeness"));
  CHECK(has_violation(b3, "1,1,1,1/2,2/3", 1, "marginal largeness"));
  CHECK(has_violation(b3, "1,1,1,0,0/2,2/3", 1, "more than once"));
  CHECK(has_violation(b3, "1,1,1/*/3", 2, "empty"));

  TInfinity d4(LieType::parse("D4"));
  CHECK(has_violation(d4, "1,1,1,4,-4/2,2/3", 1, "same row"));
  TInfinity g2(LieType::parse("G2"));
  CHECK(has_violation(g2, "1,1/2,0", 2, "not allowed in row 2"));
  TInfinity a2(LieType::parse("A2"));
  CHECK(has_violation(a2, "1,2,2/2,2", 2, "strictly increasing"));

  try {
    (void)b3.validate(parse_rows("1,1,1,2/2,2/4"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidTableau);
    CHECK(std::string(e.what()).find("row 3, column 1") != std::string::npos);
  }
}
