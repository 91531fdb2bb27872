#include <doctest.h>

#include <set>

#include "binf/error.hpp"
#include "binf/kostant.hpp"
#include "support.hpp"

using namespace binf;
using binf::test::load_tableau;
using binf::test::tableau_of;

TEST_CASE("segment statistics of the worked examples") {
  {
    KostantBijection bij(LieType::parse("A3"));
    const Tableau t = load_tableau(bij.crystal(), "a3_segments.txt");
    const SegStats s = bij.seg_stats(t);
    CHECK(s.seg_prime == 5);
    CHECK(s.seg == 5);
    CHECK(bij.segments(t).size() == 5);
  }
  {
    KostantBijection bij(LieType::parse("B3"));
    const SegStats s = bij.seg_stats(load_tableau(bij.crystal(), "b3_segments.txt"));
    CHECK(s.seg_prime == 8);
    CHECK(s.correction == 2);
    CHECK(s.seg == 6);
  }
  {
    KostantBijection bij(LieType::parse("D4"));
    const SegStats s = bij.seg_stats(load_tableau(bij.crystal(), "d4_segments.txt"));
    CHECK(s.seg_prime == 8);
    CHECK(s.correction == 1);
    CHECK(s.seg == 9);
  }
  {
    KostantBijection bij(LieType::parse("G2"));
    const SegStats s = bij.seg_stats(load_tableau(bij.crystal(), "g2_segments.txt"));
    CHECK(s.seg_prime == 6);
    CHECK(s.correction == 1);
    CHECK(s.seg == 5);
  }
}

TEST_CASE("segments and box counts") {
  KostantBijection bij(LieType::parse("B3"));
  const Tableau t = load_tableau(bij.crystal(), "b3_segments.txt");
  CHECK(bij.ell(t, 1, Letter{2}) == 2);
  CHECK(bij.ell(t, 1, Letter{-1}) == 3);
  CHECK(bij.ell(t, 1, Letter{1}) == 0);
  CHECK(bij.ell(t, 2, Letter{2}) == 0);
  CHECK(bij.ell(t, 2, Letter{-2}) == 2);
  CHECK(bij.ell(t, 3, Letter{0}) == 1);
  const auto segs = bij.segments(t);
  REQUIRE(segs.size() == 8);
  CHECK(segs.front().row == 1);
  CHECK(segs.front().letter == Letter{2});
  CHECK(segs.front().length == 2);
  CHECK(segs.back().row == 3);
  CHECK(segs.back().letter == Letter{-3});
}

TEST_CASE("Xi of the B3 example") {
  KostantBijection bij(LieType::parse("B3"));
  const Tableau t = load_tableau(bij.crystal(), "b3_segments.txt");
  const KostantPartition kp = bij.xi(t);
  CHECK(format_partition(bij.root_system(), kp) ==
        "2(a1) + 7(a1+a2+a3) + (a1+a2+2a3) + 2(a2) + 4(a2+a3) + 3(a3)");
  CHECK(kp.distinct_parts() == 6);
  CHECK(kp.total() == 19);
  CHECK(bij.content(t) == 19);
  CHECK(bij.crystal().weight(t) == RootVector{-10, -14, -16});
  CHECK(pr(bij.root_system(), kp) == RootVector{-10, -14, -16});
  CHECK(bij.upsilon(kp) == t);
}

TEST_CASE("D4 contents") {
  KostantBijection bij(LieType::parse("D4"));
  CHECK(bij.content(load_tableau(bij.crystal(), "d4_segments.txt")) == 16);
  CHECK(bij.content(load_tableau(bij.crystal(), "d4_two_bars.txt")) == 17);
  CHECK(bij.seg(load_tableau(bij.crystal(), "d4_two_bars.txt")) == 9);
}

TEST_CASE("type-specific Upsilon rules") {
  {
    KostantBijection bij(LieType::parse("B2"));
    const RootSystem& rs = bij.root_system();
    KostantPartition kp(rs.num_positive_roots());
    kp[rs.label_index(RootLabel::parse("beta(1,2)"))] = 5;
    const Tableau t = bij.upsilon(kp);
    CHECK(format_row(bij.crystal().reduced_form(t)[0]) == "0,-1,-1");
    CHECK(bij.seg(t) == 1);
    CHECK(bij.content(t) == 5);
  }
  {
    KostantBijection bij(LieType::parse("D4"));
    const RootSystem& rs = bij.root_system();
    KostantPartition kp(rs.num_positive_roots());
    kp[rs.label_index(RootLabel::parse("beta(1,3)"))] = 3;
    kp[rs.label_index(RootLabel::parse("beta(1,4)"))] = 1;
    const Tableau t = bij.upsilon(kp);
    CHECK(format_row(bij.crystal().reduced_form(t)[0]) == "4,4,-1");
    CHECK(bij.seg(t) == 2);
    kp[rs.label_index(RootLabel::parse("beta(1,3)"))] = 2;
    kp[rs.label_index(RootLabel::parse("beta(1,4)"))] = 2;
    const Tableau u = bij.upsilon(kp);
    CHECK(format_row(bij.crystal().reduced_form(u)[0]) == "-1,-1");
    CHECK(bij.seg(u) == 2);
    CHECK(bij.seg_stats(u).correction == 1);
  }
  {
    KostantBijection bij(LieType::parse("G2"));
    KostantPartition kp(6);
    kp[2] = 3;  // 2a1+a2
    const Tableau t = bij.upsilon(kp);
    CHECK(format_row(bij.crystal().reduced_form(t)[0]) == "0,-1");
    CHECK(bij.seg(t) == 1);
    CHECK(bij.xi(t) == kp);
  }
  {
    KostantBijection bij(LieType::parse("C2"));
    const RootSystem& rs = bij.root_system();
    KostantPartition kp(rs.num_positive_roots());
    kp[rs.label_index(RootLabel::parse("gamma(1,1)"))] = 2;
    const Tableau t = bij.upsilon(kp);
    CHECK(format_row(bij.crystal().reduced_form(t)[0]) == "-1,-1");
    CHECK(bij.content(t) == 2);
  }
}

TEST_CASE("partition formatting") {
  RootSystem a2(LieType::parse("A2"));
  KostantPartition kp(3);
  CHECK(format_partition(a2, kp) == "0");
  kp[2] = 1;
  kp[0] = 3;
  CHECK(format_partition(a2, kp) == "3(a1) + (a2)");
  CHECK(root_expression(RootVector{0, 2}) == "2a2");
  CHECK(root_expression(RootVector{0, 0}) == "0");
}

TEST_CASE("Kostant partition counts") {
  RootSystem g2(LieType::parse("G2"));
  CHECK(kostant_count(g2, RootVector{2, 1}) == 3);
  CHECK(kostant_count(g2, RootVector{-1, 1}) == 0);
  CHECK(kostant_count(g2, RootVector{0, 0}) == 1);
  RootSystem a2(LieType::parse("A2"));
  CHECK(kostant_count(a2, RootVector{1, 1}) == 2);
  CHECK(kostant_count(a2, RootVector{2, 2}) == 3);

  for (const char* name : binf::test::kAcceptanceTypes) {
    CAPTURE(name);
    RootSystem rs(LieType::parse(name));
    for (const auto& mu : binf::test::q_plus_up_to(rs.dim(), 5)) {
      CAPTURE(mu.to_string());
      const long long expected = binf::test::count_partitions(rs, mu);
      CHECK(kostant_count(rs, mu) == expected);
      long long n = 0;
      std::set<std::vector<int>> seen;
      for_each_partition(rs, mu, [&](const KostantPartition& kp) {
        ++n;
        seen.insert(kp.mults);
        CHECK(pr(rs, kp) == -mu);
      });
      CHECK(n == expected);
      CHECK(seen.size() == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("the content counts i-bar twice") {
  KostantBijection c2(LieType::parse("C2"));
  const Tableau t = tableau_of(c2.crystal(), "1,1,-1/2");
  CHECK(c2.content(t) == 1);
  CHECK(c2.xi(t).total() == 1);
  KostantBijection b2(LieType::parse("B2"));
  const Tableau u = tableau_of(b2.crystal(), "1,1,1,0,-2,-1/2,-2");
  CHECK(b2.content(u) == 6);
  CHECK(b2.xi(u).total() == 6);
}
