#include <doctest.h>

#include <random>

#include "binf/error.hpp"
#include "binf/lusztig.hpp"
#include "support.hpp"

using namespace binf;

TEST_CASE("Lusztig datum of the B3 example") {
  KostantBijection bij(LieType::parse("B3"));
  const LongWord w(bij.root_system(), {3, 2, 3, 2, 1, 2, 3, 2, 1});
  CHECK(w.to_string() == "3,2,3,2,1,2,3,2,1");
  const Tableau t = binf::test::load_tableau(bij.crystal(), "b3_segments.txt");
  const LusztigDatum d = theta(bij, w, t);
  CHECK(d.coords == std::vector<int>{3, 0, 4, 2, 0, 1, 7, 0, 2});
  CHECK(nz(d) == 6);
  CHECK(nz(d) == bij.seg(t));
  CHECK(lusztig_weight(bij.root_system(), w, d) == bij.crystal().weight(t));
  CHECK(lusztig_to_kostant(w, d) == bij.xi(t));
}

TEST_CASE("words are validated") {
  RootSystem b3(LieType::parse("B3"));
  CHECK_THROWS_AS(LongWord(b3, {3, 2, 3, 2, 1, 2, 3, 2}), Error);
  CHECK_THROWS_AS(LongWord(b3, {3, 3, 3, 2, 1, 2, 3, 2, 1}), Error);
  try {
    LongWord(b3, {1, 2, 3, 1, 2, 3, 1, 2, 4});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidWord);
  }
  const LongWord w(b3, default_long_word(b3));
  LusztigDatum d{{3, 2, 3, 2, 1, 2, 3, 2, 1}, std::vector<int>(9, 0)};
  CHECK_THROWS_AS(lusztig_to_kostant(w, d), Error);
}

TEST_CASE("Kostant and Lusztig coordinates are permutations of each other") {
  std::mt19937_64 rng(11);
  for (const char* name : {"A3", "B3", "C3", "D4", "G2"}) {
    CAPTURE(name);
    RootSystem rs(LieType::parse(name));
    for (int k = 0; k < 5; ++k) {
      const LongWord w(rs, random_long_word(rs, rng));
      std::uniform_int_distribution<int> coin(0, 3);
      for (int s = 0; s < 50; ++s) {
        KostantPartition kp(rs.num_positive_roots());
        for (auto& m : kp.mults) m = coin(rng);
        const LusztigDatum d = kostant_to_lusztig(w, kp);
        CHECK(d.word == w.word());
        CHECK(nz(d) == kp.distinct_parts());
        CHECK(lusztig_to_kostant(w, d) == kp);
        CHECK(lusztig_weight(rs, w, d) == pr(rs, kp));
      }
    }
  }
}
