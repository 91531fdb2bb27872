#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace binf {

/// Dense univariate polynomial with 64-bit integer coefficients.
///
/// Coefficients are stored lowest degree first and kept normalized: the
/// leading coefficient is nonzero, and the zero polynomial has no
/// coefficients at all.
class IntPoly {
 public:
  using Coeff = std::int64_t;

  IntPoly() = default;
  IntPoly(std::initializer_list<Coeff> coeffs);
  explicit IntPoly(std::vector<Coeff> coeffs);

  static IntPoly constant(Coeff c);
  static IntPoly monomial(int degree, Coeff c = 1);
  /// (1 - x)^d
  static IntPoly one_minus_x_pow(int d);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff coeff(int k) const;
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  Coeff eval(Coeff x) const;

  /// Coefficients n_d with p(x) = sum_d n_d (1 - x)^d.
  IntPoly in_one_minus_basis() const;

  bool has_nonnegative_coeffs() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(Coeff c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, Coeff c) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(IntPoly a) { return a *= -1; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Human-readable form in increasing degree, e.g. "2 - 3u + u^2".
  std::string to_string(std::string_view var = "q") const;

 private:
  void normalize();

  std::vector<Coeff> coeffs_;
};

}  // namespace binf
