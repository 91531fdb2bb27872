#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "binf/cartan.hpp"
#include "binf/polynomial.hpp"

namespace binf {

/// An element of the Weyl group, stored as its matrix on the root lattice
/// (column j is w(alpha_j)) together with the matrix on the weight lattice.
/// Equality and hashing use the root-lattice matrix only.
class WeylElement {
 public:
  static constexpr int kMaxRank = 8;

  int rank() const { return rank_; }
  int length() const { return length_; }
  /// Root-lattice matrix entry, 0-based.
  int entry(int row, int col) const { return root_[static_cast<std::size_t>(row * kMaxRank + col)]; }

  RootVector apply(const RootVector& v) const;
  WeightVector apply(const WeightVector& v) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rank_ == b.rank_ && a.root_ == b.root_;
  }

  struct Hash {
    std::size_t operator()(const WeylElement& w) const noexcept;
  };

 private:
  friend class WeylGroup;
  using Matrix = std::array<std::int8_t, kMaxRank * kMaxRank>;

  int rank_ = 0;
  int length_ = 0;
  Matrix root_{};
  Matrix weight_{};
};

/// The full Weyl group, generated breadth-first from the identity so that
/// each element's BFS depth is its length.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultLimit = 10'000'000;

  /// Throws LimitExceeded when |W| > limit.
  explicit WeylGroup(const RootSystem& rs, std::size_t limit = kDefaultLimit);

  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& longest() const { return elements_[longest_]; }
  IntPoly poincare_polynomial() const;

  /// |W| from the classical order formulas.
  static std::size_t order(const LieType& type);

 private:
  std::vector<WeylElement> elements_;
  std::size_t longest_ = 0;
};

/// W_mu(q): sum of q^{l(w)} over the stabilizer of mu.
IntPoly stabilizer_poly(const WeylGroup& group, const WeightVector& mu);

/// True iff the word has length N = #Phi+ and multiplies to w_0.
bool is_long_word(const RootSystem& rs, std::span<const int> word);

/// Positions in rs.positive_roots() of beta_1..beta_N, where
/// beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}). Throws InvalidWord.
std::vector<std::size_t> beta_indices(const RootSystem& rs, std::span<const int> word);
std::vector<PositiveRoot> beta_sequence(const RootSystem& rs, std::span<const int> word);

/// Lexicographically smallest long word.
std::vector<int> default_long_word(const RootSystem& rs);
/// Uniform choice among ascents at each step; always a long word.
std::vector<int> random_long_word(const RootSystem& rs, std::mt19937_64& rng);
/// Every long word, in lexicographic order. Throws LimitExceeded past limit.
std::vector<std::vector<int>> all_long_words(const RootSystem& rs, std::size_t limit = 100000);

}  // namespace binf
