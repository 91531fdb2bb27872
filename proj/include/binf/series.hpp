#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "binf/cartan.hpp"
#include "binf/kostant.hpp"
#include "binf/lusztig.hpp"
#include "binf/polynomial.hpp"

namespace binf {

/// Power series in z^mu, mu in Q+, with coefficients in Z[u], truncated at
/// height(mu) <= bound. Products drop every term above the bound.
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t rank, int bound);
  static TruncatedSeries one(std::size_t rank, int bound);

  std::size_t rank() const { return rank_; }
  int bound() const { return bound_; }
  const std::map<RootVector, IntPoly>& terms() const { return terms_; }
  IntPoly coeff(const RootVector& mu) const;

  /// Adds c z^mu; silently dropped above the bound.
  void add(const RootVector& mu, const IntPoly& c);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Coefficients evaluated at u = value, as constant polynomials.
  TruncatedSeries substitute(IntPoly::Coeff value) const;

 private:
  std::size_t rank_;
  int bound_;
  std::map<RootVector, IntPoly> terms_;
};

/// prod over positive roots of (1 - u z^a) / (1 - z^a).
TruncatedSeries lhs_product(const RootSystem& rs, int bound);

enum class TableauSource { CrystalBfs, Upsilon };

/// sum over T of (1 - u)^seg(T) z^{-wt(T)}.
TruncatedSeries rhs_tableau_sum(const KostantBijection& bij, int bound, TableauSource source, unsigned threads = 1);

/// sum over Lusztig data c of (1 - u)^nz(c) z^{sum c_j beta_j}.
TruncatedSeries rhs_lusztig_sum(const RootSystem& rs, const LongWord& word, int bound);

/// Coefficient of z^mu in prod (1 - z^a)^{-1}: lhs_product at u = 0.
TruncatedSeries partition_generating_series(const RootSystem& rs, int bound);

struct GkDiscrepancy {
  RootVector mu;
  IntPoly lhs, tableau_bfs, tableau_upsilon, lusztig;
};

struct GkReport {
  LieType type;
  int bound;
  std::vector<int> word;
  TruncatedSeries lhs;
  std::size_t tableau_count = 0;
  std::vector<GkDiscrepancy> discrepancies;

  bool ok() const { return discrepancies.empty(); }
};

/// Compares lhs_product with both tableau sums and the Lusztig sum
/// monomial by monomial. Uses default_long_word when `word` is empty.
GkReport verify_gk(const LieType& type, int bound, std::optional<std::vector<int>> word = std::nullopt,
                   unsigned threads = 1);

}  // namespace binf
