#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "binf/cartan.hpp"

namespace binf {

/// A box of B(omega_1): k > 0 is the letter k, -k is k-bar, 0 is the 0-box
/// (types B and G2 only).
struct Letter {
  int value = 0;

  std::string to_string() const { return std::to_string(value); }
  friend bool operator==(Letter, Letter) = default;
};

/// Unmatched signs left by the signature rule, as positions in the word.
/// All minuses precede all pluses.
struct Signature {
  std::vector<std::size_t> minus;
  std::vector<std::size_t> plus;
};

/// The crystal graph B(omega_1) for one type, with its alphabet order and
/// the tensor-product action on words of letters.
///
/// Words follow the convention where each letter contributes eps_i minus
/// signs followed by phi_i plus signs; adjacent (+,-) pairs cancel; f_i acts
/// on the letter of the leftmost surviving plus and e_i on the letter of the
/// rightmost surviving minus. On a two-letter word b1 b2 this is the rule
/// "f_i acts on b1 iff phi_i(b1) > eps_i(b2)".
class FundamentalCrystal {
 public:
  struct Edge {
    Letter from;
    int i;
    Letter to;
  };

  explicit FundamentalCrystal(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  const LieType& type() const { return rs_.type(); }

  /// The alphabet in increasing order; in type D the letter r is listed
  /// before r-bar although the two are incomparable.
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  bool contains(Letter x) const;
  /// Position of x in alphabet(). Throws InvalidArgument for foreign letters.
  std::size_t position(Letter x) const;

  /// Strict order x < y; false for the incomparable D pair (r, r-bar).
  bool precedes(Letter x, Letter y) const;
  bool comparable(Letter x, Letter y) const;

  std::optional<Letter> f(int i, Letter x) const;
  std::optional<Letter> e(int i, Letter x) const;
  int eps(int i, Letter x) const;
  int phi(int i, Letter x) const;

  /// d(x) with wt(x) = omega_1 - d(x); propagated from d(1) = 0 along edges.
  const RootVector& depth(Letter x) const { return depth_[position(x)]; }
  WeightVector weight(Letter x) const;

  std::vector<Edge> edges() const;

  Signature signature(int i, std::span<const Letter> word) const;
  std::optional<std::size_t> f_position(int i, std::span<const Letter> word) const;
  std::optional<std::size_t> e_position(int i, std::span<const Letter> word) const;
  std::optional<std::vector<Letter>> word_f(int i, std::span<const Letter> word) const;
  std::optional<std::vector<Letter>> word_e(int i, std::span<const Letter> word) const;
  int word_eps(int i, std::span<const Letter> word) const;
  int word_phi(int i, std::span<const Letter> word) const;

 private:
  void add_edge(int i, int from, int to);
  std::size_t pos_unchecked(Letter x) const { return lookup_[static_cast<std::size_t>(x.value + offset_)]; }

  RootSystem rs_;
  std::vector<Letter> alphabet_;
  int offset_ = 0;
  std::vector<std::size_t> lookup_;  // value + offset -> position, npos if absent
  // [i-1][position] -> target position or npos
  std::vector<std::vector<std::size_t>> f_, e_;
  std::vector<std::vector<int>> eps_, phi_;
  std::vector<RootVector> depth_;
  std::optional<std::size_t> d_pair_;  // position of r in type D
};

}  // namespace binf
