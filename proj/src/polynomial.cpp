#include "binf/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace binf {

IntPoly::IntPoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) {
  normalize();
}

IntPoly::IntPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly IntPoly::constant(Coeff c) { return IntPoly{c}; }

IntPoly IntPoly::monomial(int degree, Coeff c) {
  std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_x_pow(int d) {
  IntPoly result{1};
  const IntPoly factor{1, -1};
  for (int k = 0; k < d; ++k) result = result * factor;
  return result;
}

IntPoly::Coeff IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

IntPoly::Coeff IntPoly::eval(Coeff x) const {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::in_one_minus_basis() const {
  // Substitute x = 1 - y and expand in y.
  IntPoly result;
  IntPoly power{1};
  const IntPoly one_minus_y{1, -1};
  for (Coeff c : coeffs_) {
    result += power * c;
    power = power * one_minus_y;
  }
  return result;
}

bool IntPoly::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c >= 0; });
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(Coeff c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPoly::Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Coeff c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Coeff mag = c < 0 ? -c : c;
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << var;
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace binf
