#pragma once

#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "binf/io.hpp"
#include "binf/kostant.hpp"
#include "binf/symfunc.hpp"
#include "binf/tableau.hpp"
#include "binf/weyl.hpp"

namespace binf::test {

inline const char* const kAcceptanceTypes[] = {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"};

inline std::string data_path(const std::string& name) { return std::string(BINF_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Tableau load_tableau(const TInfinity& crystal, const std::string& name) {
  return crystal.validate(parse_rows(slurp(data_path(name))));
}

inline Tableau tableau_of(const TInfinity& crystal, const std::string& text) {
  return crystal.validate(parse_rows(text));
}

/// Every mu in Q+ of height <= max_height, by direct enumeration of
/// coordinate vectors.
inline std::vector<RootVector> q_plus_up_to(std::size_t rank, int max_height) {
  std::vector<RootVector> out;
  RootVector v(rank);
  auto rec = [&](auto&& self, std::size_t k, int left) -> void {
    if (k == rank) {
      out.push_back(v);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      v[k] = c;
      self(self, k + 1, left - c);
    }
    v[k] = 0;
  };
  rec(rec, 0, max_height);
  return out;
}

/// Kostant partitions of mu counted by recursion on the last root used,
/// kept independent of the library's enumeration.
inline long long count_partitions(const RootSystem& rs, const RootVector& mu, std::size_t first = 0) {
  if (mu.is_zero()) return 1;
  long long n = 0;
  for (std::size_t k = first; k < rs.num_positive_roots(); ++k) {
    RootVector rest = mu - rs.root(k).vector;
    if (rest.is_nonnegative()) n += count_partitions(rs, rest, k);
  }
  return n;
}

/// Hall-Littlewood P_mu times W_mu(q), written in Weyl characters, from
/// sum_w sign(w) w(z^{mu+rho} prod_{a>0} (1 - q z^{-a})) divided by the
/// Weyl denominator. Keys are dominant lambda.
inline std::map<WeightVector, IntPoly> hall_littlewood_by_symmetrization(const SymFunc& sf, const WeightVector& mu) {
  const RootSystem& rs = sf.root_system();
  WeightLaurentPoly prod;
  prod[mu + rs.rho()] = IntPoly{1};
  for (const auto& root : rs.positive_roots()) {
    const WeightVector a = rs.to_weight(root.vector);
    WeightLaurentPoly next;
    for (const auto& [w, c] : prod) {
      next[w] += c;
      next[w - a] += c * IntPoly{0, -1};
    }
    prod = std::move(next);
  }
  WeightLaurentPoly alt;
  for (const auto& w : sf.weyl_group().elements()) {
    const IntPoly::Coeff sign = w.length() % 2 ? -1 : 1;
    for (const auto& [z, c] : prod) alt[w.apply(z)] += c * sign;
  }
  std::map<WeightVector, IntPoly> out;
  for (const auto& [z, c] : alt) {
    bool regular = true;
    for (std::size_t k = 0; k < z.rank(); ++k) regular = regular && z[k] > 0;
    if (regular && !c.is_zero()) out[z - rs.rho()] = c;
  }
  return out;
}

}  // namespace binf::test
