#pragma once

#include <map>
#include <vector>

#include "binf/cartan.hpp"
#include "binf/kostant.hpp"
#include "binf/polynomial.hpp"
#include "binf/weyl.hpp"

namespace binf {

/// Finite Laurent polynomial in z^mu, mu in P, with coefficients in Z[q].
using WeightLaurentPoly = std::map<WeightVector, IntPoly>;

enum class QKostantMode { Tableau, Bruteforce };

/// Lusztig's q-analogue of Kostant's partition function and the objects
/// built from it for one type. Results are memoized, so an instance must
/// not be shared between threads.
class SymFunc {
 public:
  explicit SymFunc(LieType type);

  const RootSystem& root_system() const { return bij_.root_system(); }
  const KostantBijection& bijection() const { return bij_; }
  const WeylGroup& weyl_group() const { return weyl_; }

  /// P(mu; q). Tableau mode sums q^|T| over Upsilon-built tableaux of
  /// weight -mu; brute force expands prod (1 - q z^a)^{-1}. 0 off Q+.
  IntPoly q_kostant(const RootVector& mu, QKostantMode mode = QKostantMode::Bruteforce) const;
  IntPoly q_kostant_weight(const WeightVector& mu, QKostantMode mode = QKostantMode::Bruteforce) const;

  /// K_{lambda,mu}(q) as the alternating Weyl-group sum.
  IntPoly kostka_foulkes(const WeightVector& lambda, const WeightVector& mu) const;

  bool is_dominant(const WeightVector& w) const;
  /// mu <= lambda: lambda - mu is a nonnegative integral root combination.
  bool dominates(const WeightVector& lambda, const WeightVector& mu) const;
  WeightVector dominant_conjugate(WeightVector w) const;

  /// All weights of V(lambda), sorted.
  std::vector<WeightVector> weights(const WeightVector& lambda) const;
  /// Dominant mu <= lambda, sorted by height of lambda - mu, then lexicographically.
  std::vector<WeightVector> dominant_weights_below(const WeightVector& lambda) const;

  /// dim V(lambda)_mu by Freudenthal's formula.
  long long multiplicity(const WeightVector& lambda, const WeightVector& mu) const;
  long long weyl_dimension(const WeightVector& lambda) const;
  WeightLaurentPoly character(const WeightVector& lambda) const;

  /// P_mu(z; q), from chi_lambda = sum_{mu <= lambda} K_{lambda,mu}(q) P_mu.
  WeightLaurentPoly hall_littlewood(const WeightVector& mu) const;

  /// W_mu(q)
  IntPoly stabilizer(const WeightVector& mu) const { return stabilizer_poly(weyl_, mu); }

 private:
  void require_dominant(const WeightVector& w, const char* what) const;
  const std::map<WeightVector, long long>& dominant_multiplicities(const WeightVector& lambda) const;

  KostantBijection bij_;
  WeylGroup weyl_;
  mutable std::map<RootVector, IntPoly> qk_cache_;
  mutable std::map<WeightVector, std::map<WeightVector, long long>> mult_cache_;
  mutable std::map<WeightVector, WeightLaurentPoly> hl_cache_;
};

/// Adds c * p to acc.
void add_scaled(WeightLaurentPoly& acc, const WeightLaurentPoly& p, const IntPoly& c);
/// Coefficients evaluated at q = value; zero terms dropped.
WeightLaurentPoly evaluate_q(const WeightLaurentPoly& p, IntPoly::Coeff value);

}  // namespace binf
