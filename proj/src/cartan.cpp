#include "binf/cartan.hpp"

#include <cctype>
#include <charconv>

#include "binf/error.hpp"

namespace binf {

namespace {

constexpr const char* kG2Names[6] = {"a1", "a1+a2", "2a1+a2", "3a1+a2", "3a1+2a2", "a2"};

bool supported(Family f, int r) {
  switch (f) {
    case Family::A: return r >= 1 && r <= 8;
    case Family::B:
    case Family::C: return r >= 2 && r <= 5;
    case Family::D: return r >= 3 && r <= 5;
    case Family::G: return r == 2;
  }
  return false;
}

// Coefficient vector with `value` on the 1-based index range [from, to].
void fill(std::vector<int>& c, int from, int to, int value) {
  for (int j = from; j <= to; ++j) c[static_cast<std::size_t>(j - 1)] = value;
}

PositiveRoot make_root(RootLabel::Kind kind, int i, int k, std::vector<int> c) {
  return PositiveRoot{RootLabel{kind, i, k}, RootVector(std::move(c))};
}

}  // namespace

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
  if (!supported(family, rank))
    throw Error(ErrorCode::UnsupportedType,
                "unsupported Lie type " + std::string(1, static_cast<char>(family)) + std::to_string(rank));
}

LieType LieType::parse(std::string_view name) {
  auto fail = [&] { return Error(ErrorCode::UnsupportedType, "unsupported Lie type '" + std::string(name) + "'"); };
  if (name.size() < 2) throw fail();
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (f != 'A' && f != 'B' && f != 'C' && f != 'D' && f != 'G') throw fail();
  int rank = 0;
  auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) throw fail();
  if (!supported(static_cast<Family>(f), rank)) throw fail();
  return LieType(static_cast<Family>(f), rank);
}

std::string LieType::name() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

std::string RootLabel::to_string() const {
  switch (kind) {
    case Kind::Beta: return "beta(" + std::to_string(i) + "," + std::to_string(k) + ")";
    case Kind::Gamma: return "gamma(" + std::to_string(i) + "," + std::to_string(k) + ")";
    case Kind::G2: return kG2Names[i];
  }
  return {};
}

RootLabel RootLabel::parse(std::string_view text) {
  for (int n = 0; n < 6; ++n)
    if (text == kG2Names[n]) return RootLabel{Kind::G2, n, 0};
  auto fail = [&] { return Error(ErrorCode::InvalidArgument, "malformed root label '" + std::string(text) + "'"); };
  Kind kind;
  std::string_view rest;
  if (text.starts_with("beta(")) {
    kind = Kind::Beta;
    rest = text.substr(5);
  } else if (text.starts_with("gamma(")) {
    kind = Kind::Gamma;
    rest = text.substr(6);
  } else {
    throw fail();
  }
  int i = 0, k = 0;
  auto [p1, e1] = std::from_chars(rest.data(), rest.data() + rest.size(), i);
  if (e1 != std::errc() || p1 == rest.data() + rest.size() || *p1 != ',') throw fail();
  auto [p2, e2] = std::from_chars(p1 + 1, rest.data() + rest.size(), k);
  if (e2 != std::errc() || p2 + 1 != rest.data() + rest.size() || *p2 != ')') throw fail();
  return RootLabel{kind, i, k};
}

IntMatrix cartan_matrix(const LieType& type) {
  const int r = type.rank();
  IntMatrix a(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
  auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v; };
  for (int i = 1; i <= r; ++i) set(i, i, 2);
  switch (type.family()) {
    case Family::A:
    case Family::B:
    case Family::C:
      for (int i = 1; i < r; ++i) {
        set(i, i + 1, -1);
        set(i + 1, i, -1);
      }
      if (type.family() == Family::B) set(r, r - 1, -2);
      if (type.family() == Family::C) set(r - 1, r, -2);
      break;
    case Family::D:
      for (int i = 1; i + 1 <= r - 1; ++i) {
        set(i, i + 1, -1);
        set(i + 1, i, -1);
      }
      set(r - 2, r, -1);
      set(r, r - 2, -1);
      break;
    case Family::G:
      set(1, 2, -3);
      set(2, 1, -1);
      break;
  }
  return a;
}

std::vector<PositiveRoot> positive_roots(const LieType& type) {
  using K = RootLabel::Kind;
  const int r = type.rank();
  const auto n = static_cast<std::size_t>(r);
  std::vector<PositiveRoot> betas, gammas;
  switch (type.family()) {
    case Family::A:
    case Family::B:
      for (int i = 1; i <= r; ++i)
        for (int k = i; k <= r; ++k) {
          std::vector<int> c(n, 0);
          fill(c, i, k, 1);
          betas.push_back(make_root(K::Beta, i, k, c));
        }
      if (type.family() == Family::B)
        for (int i = 1; i <= r; ++i)
          for (int k = i + 1; k <= r; ++k) {
            std::vector<int> c(n, 0);
            fill(c, i, k - 1, 1);
            fill(c, k, r, 2);
            gammas.push_back(make_root(K::Gamma, i, k, c));
          }
      break;
    case Family::C:
      for (int i = 1; i <= r - 1; ++i)
        for (int k = i; k <= r - 1; ++k) {
          std::vector<int> c(n, 0);
          fill(c, i, k, 1);
          betas.push_back(make_root(K::Beta, i, k, c));
        }
      for (int i = 1; i <= r; ++i)
        for (int k = i; k <= r; ++k) {
          std::vector<int> c(n, 0);
          fill(c, i, k - 1, 1);
          fill(c, k, r - 1, 2);
          fill(c, r, r, 1);
          gammas.push_back(make_root(K::Gamma, i, k, c));
        }
      break;
    case Family::D:
      for (int i = 1; i <= r - 1; ++i) {
        for (int k = i; k <= r - 1; ++k) {
          std::vector<int> c(n, 0);
          fill(c, i, k, 1);
          betas.push_back(make_root(K::Beta, i, k, c));
        }
        std::vector<int> c(n, 0);
        fill(c, i, r - 2, 1);
        fill(c, r, r, 1);
        betas.push_back(make_root(K::Beta, i, r, c));
      }
      for (int i = 1; i <= r - 1; ++i)
        for (int k = i + 1; k <= r - 1; ++k) {
          std::vector<int> c(n, 0);
          fill(c, i, k - 1, 1);
          fill(c, k, r - 2, 2);
          fill(c, r - 1, r, 1);
          gammas.push_back(make_root(K::Gamma, i, k, c));
        }
      break;
    case Family::G: {
      const int coeffs[6][2] = {{1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}, {0, 1}};
      for (int m = 0; m < 6; ++m)
        betas.push_back(make_root(K::G2, m, 0, {coeffs[m][0], coeffs[m][1]}));
      break;
    }
  }
  betas.insert(betas.end(), gammas.begin(), gammas.end());
  return betas;
}

RootSystem::RootSystem(LieType type) : type_(type), cartan_(cartan_matrix(type)), roots_(binf::positive_roots(type)) {
  const int r = type.rank();
  sym_.assign(dim(), 1);
  if (type.family() == Family::B)
    for (int i = 1; i < r; ++i) sym_[idx(i)] = 2;
  if (type.family() == Family::C) sym_[idx(r)] = 2;
  if (type.family() == Family::G) sym_[idx(2)] = 3;

  // Gauss-Jordan over the rationals.
  const std::size_t n = dim();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col].numerator() == 0) ++piv;
    std::swap(m[piv], m[col]);
    Rational p = m[col][col];
    for (auto& x : m[col]) x /= p;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].numerator() == 0) continue;
      Rational f = m[row][col];
      for (std::size_t j = 0; j < 2 * n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  inverse_cartan_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inverse_cartan_[i][j] = m[i][n + j];
}

std::optional<std::size_t> RootSystem::index_of(const RootVector& v) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k].vector == v) return k;
  return std::nullopt;
}

std::optional<std::size_t> RootSystem::index_of(const RootLabel& label) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k].label == label) return k;
  return std::nullopt;
}

std::size_t RootSystem::label_index(const RootLabel& label) const {
  auto k = index_of(label);
  if (!k) throw Error(ErrorCode::InvalidArgument, "no root " + label.to_string() + " in type " + type_.name());
  return *k;
}

WeightVector RootSystem::rho() const { return WeightVector(std::vector<int>(dim(), 1)); }

RootVector RootSystem::two_rho() const {
  RootVector s = zero_root();
  for (const auto& root : roots_) s += root.vector;
  return s;
}

void RootSystem::check_index(int i) const {
  if (i < 1 || i > rank())
    throw Error(ErrorCode::InvalidArgument,
                "simple index " + std::to_string(i) + " out of range for " + type_.name());
}

int RootSystem::pairing(int i, const RootVector& v) const {
  const auto& row = cartan_[idx(i)];
  int s = 0;
  for (std::size_t j = 0; j < dim(); ++j) s += row[j] * v[j];
  return s;
}

int RootSystem::pairing(int i, const WeightVector& v) const { return v[idx(i)]; }

RootVector RootSystem::reflect(int i, RootVector v) const {
  check_index(i);
  v[idx(i)] -= pairing(i, v);
  return v;
}

WeightVector RootSystem::reflect(int i, WeightVector v) const {
  check_index(i);
  const int p = v[idx(i)];
  // alpha_i in weight coordinates is column i of the Cartan matrix.
  for (std::size_t k = 0; k < dim(); ++k) v[k] -= p * cartan_[k][idx(i)];
  return v;
}

WeightVector RootSystem::to_weight(const RootVector& v) const {
  WeightVector w(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    int s = 0;
    for (std::size_t j = 0; j < dim(); ++j) s += cartan_[i][j] * v[j];
    w[i] = s;
  }
  return w;
}

std::vector<Rational> RootSystem::to_root_rational(const WeightVector& v) const {
  std::vector<Rational> out(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out[i] += inverse_cartan_[i][j] * v[j];
  return out;
}

std::optional<RootVector> RootSystem::to_root(const WeightVector& v) const {
  auto q = to_root_rational(v);
  RootVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (q[i].denominator() != 1) return std::nullopt;
    out[i] = static_cast<int>(q[i].numerator());
  }
  return out;
}

long long RootSystem::inner(const RootVector& x, const RootVector& y) const {
  long long s = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      s += static_cast<long long>(x[i]) * y[j] * sym_[i] * cartan_[i][j];
  return s;
}

long long RootSystem::inner(const WeightVector& x, const RootVector& y) const {
  long long s = 0;
  for (std::size_t j = 0; j < dim(); ++j) s += static_cast<long long>(y[j]) * sym_[j] * x[j];
  return s;
}

}  // namespace binf
