#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace binf {

using Rational = boost::rational<long long>;
using IntMatrix = std::vector<std::vector<int>>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

/// A supported finite Cartan type: A1..A8, B2..B5, C2..C5, D3..D5, G2.
class LieType {
 public:
  LieType(Family family, int rank);

  /// Case-insensitive, e.g. "b3" or "G2".
  static LieType parse(std::string_view name);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;

 private:
  Family family_;
  int rank_;
};

/// Integer coordinate vector in a fixed basis. The tag keeps root-lattice
/// coordinates (simple roots) apart from weight-lattice coordinates
/// (fundamental weights).
template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : c_(rank, 0) {}
  LatticeVector(std::initializer_list<int> c) : c_(c) {}
  explicit LatticeVector(std::vector<int> c) : c_(std::move(c)) {}

  /// The i-th basis vector, i in 1..rank.
  static LatticeVector unit(std::size_t rank, int i) {
    LatticeVector v(rank);
    v.c_[static_cast<std::size_t>(i - 1)] = 1;
    return v;
  }

  std::size_t rank() const { return c_.size(); }
  int operator[](std::size_t k) const { return c_[k]; }
  int& operator[](std::size_t k) { return c_[k]; }
  const std::vector<int>& coeffs() const { return c_; }

  bool is_zero() const {
    for (int x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_nonnegative() const {
    for (int x : c_)
      if (x < 0) return false;
    return true;
  }
  int height() const {
    int h = 0;
    for (int x : c_) h += x;
    return h;
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  LatticeVector& operator*=(int s) {
    for (int& x : c_) x *= s;
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(int s, LatticeVector a) { return a *= s; }
  friend LatticeVector operator-(LatticeVector a) { return a *= -1; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  /// "[1,0,2]"
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(c_[k]);
    }
    return s + "]";
  }

 private:
  std::vector<int> c_;
};

struct RootTag {};
struct WeightTag {};
using RootVector = LatticeVector<RootTag>;
using WeightVector = LatticeVector<WeightTag>;

struct LatticeVectorHash {
  template <class Tag>
  std::size_t operator()(const LatticeVector<Tag>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : v.coeffs()) h = (h ^ static_cast<std::size_t>(x + 0x4000)) * 0x100000001b3ULL;
    return h;
  }
};

/// Name of a positive root in the type-by-type root table: beta(i,k),
/// gamma(i,k), or one of the six G2 roots ("a1", "a1+a2", "2a1+a2",
/// "3a1+a2", "3a1+2a2", "a2").
struct RootLabel {
  enum class Kind { Beta, Gamma, G2 };
  Kind kind = Kind::Beta;
  int i = 0;  // G2: index into the six-root list
  int k = 0;

  std::string to_string() const;
  static RootLabel parse(std::string_view text);

  friend bool operator==(const RootLabel&, const RootLabel&) = default;
  friend auto operator<=>(const RootLabel&, const RootLabel&) = default;
};

struct PositiveRoot {
  RootLabel label;
  RootVector vector;
};

/// Cartan matrix a_ij = <h_i, alpha_j> in Bourbaki numbering: the short
/// simple root of B_r is alpha_r, the long one of C_r is alpha_r, and in
/// G2 alpha_1 is short.
IntMatrix cartan_matrix(const LieType& type);

/// The positive-root table: betas ordered by (i,k), then gammas by (i,k);
/// G2 in the order a1, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2, a2.
std::vector<PositiveRoot> positive_roots(const LieType& type);

/// Cartan data, root tables and lattice conversions for one type.
/// Simple-root indices in this interface are 1-based.
class RootSystem {
 public:
  explicit RootSystem(LieType type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank(); }
  std::size_t dim() const { return static_cast<std::size_t>(type_.rank()); }
  const IntMatrix& cartan() const { return cartan_; }
  int cartan_entry(int i, int j) const { return cartan_[idx(i)][idx(j)]; }
  /// d_i = (alpha_i, alpha_i) / 2, so that d_i a_ij is symmetric.
  int symmetrizer(int i) const { return sym_[idx(i)]; }

  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
  std::size_t num_positive_roots() const { return roots_.size(); }
  const PositiveRoot& root(std::size_t index) const { return roots_[index]; }
  std::optional<std::size_t> index_of(const RootVector& v) const;
  std::optional<std::size_t> index_of(const RootLabel& label) const;
  /// Throws InvalidArgument when the label names no root of this type.
  std::size_t label_index(const RootLabel& label) const;

  RootVector simple_root(int i) const { return RootVector::unit(dim(), i); }
  RootVector zero_root() const { return RootVector(dim()); }
  WeightVector rho() const;
  RootVector two_rho() const;

  /// <h_i, v>
  int pairing(int i, const RootVector& v) const;
  int pairing(int i, const WeightVector& v) const;

  /// s_i(v) = v - <h_i, v> alpha_i
  RootVector reflect(int i, RootVector v) const;
  WeightVector reflect(int i, WeightVector v) const;

  WeightVector to_weight(const RootVector& v) const;
  std::vector<Rational> to_root_rational(const WeightVector& v) const;
  /// Empty when the weight is not in the root lattice.
  std::optional<RootVector> to_root(const WeightVector& v) const;

  /// W-invariant form normalized so that (alpha_i, alpha_i) = 2 d_i.
  long long inner(const RootVector& x, const RootVector& y) const;
  long long inner(const WeightVector& x, const RootVector& y) const;

  void check_index(int i) const;

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i - 1); }

  LieType type_;
  IntMatrix cartan_;
  std::vector<int> sym_;
  std::vector<std::vector<Rational>> inverse_cartan_;
  std::vector<PositiveRoot> roots_;
};

}  // namespace binf
