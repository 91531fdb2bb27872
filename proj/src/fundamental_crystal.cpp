#include "binf/fundamental_crystal.hpp"

#include <deque>
#include <limits>

#include "binf/error.hpp"

namespace binf {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

FundamentalCrystal::FundamentalCrystal(const RootSystem& rs) : rs_(rs) {
  const int r = rs.rank();
  std::vector<int> values;
  switch (rs.type().family()) {
    case Family::A:
      for (int k = 1; k <= r + 1; ++k) values.push_back(k);
      break;
    case Family::B:
      for (int k = 1; k <= r; ++k) values.push_back(k);
      values.push_back(0);
      for (int k = r; k >= 1; --k) values.push_back(-k);
      break;
    case Family::C:
    case Family::D:
      for (int k = 1; k <= r; ++k) values.push_back(k);
      for (int k = r; k >= 1; --k) values.push_back(-k);
      break;
    case Family::G:
      values = {1, 2, 3, 0, -3, -2, -1};
      break;
  }
  offset_ = r + 1;
  lookup_.assign(static_cast<std::size_t>(2 * offset_ + 1), npos);
  for (std::size_t p = 0; p < values.size(); ++p) {
    alphabet_.push_back(Letter{values[p]});
    lookup_[static_cast<std::size_t>(values[p] + offset_)] = p;
  }
  if (rs.type().family() == Family::D) d_pair_ = static_cast<std::size_t>(r - 1);

  const std::size_t n = alphabet_.size();
  f_.assign(rs.dim(), std::vector<std::size_t>(n, npos));
  e_.assign(rs.dim(), std::vector<std::size_t>(n, npos));

  switch (rs.type().family()) {
    case Family::A:
      for (int i = 1; i <= r; ++i) add_edge(i, i, i + 1);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i < r; ++i) {
        add_edge(i, i, i + 1);
        add_edge(i, -(i + 1), -i);
      }
      if (rs.type().family() == Family::B) {
        add_edge(r, r, 0);
        add_edge(r, 0, -r);
      } else {
        add_edge(r, r, -r);
      }
      break;
    case Family::D:
      for (int i = 1; i <= r - 2; ++i) {
        add_edge(i, i, i + 1);
        add_edge(i, -(i + 1), -i);
      }
      add_edge(r - 1, r - 1, r);
      add_edge(r - 1, -r, -(r - 1));
      add_edge(r, r - 1, -r);
      add_edge(r, r, -(r - 1));
      break;
    case Family::G:
      add_edge(1, 1, 2);
      add_edge(1, 3, 0);
      add_edge(1, 0, -3);
      add_edge(1, -2, -1);
      add_edge(2, 2, 3);
      add_edge(2, -3, -2);
      break;
  }

  eps_.assign(rs.dim(), std::vector<int>(n, 0));
  phi_.assign(rs.dim(), std::vector<int>(n, 0));
  for (std::size_t i = 0; i < rs.dim(); ++i)
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = e_[i][p]; q != npos; q = e_[i][q]) ++eps_[i][p];
      for (std::size_t q = f_[i][p]; q != npos; q = f_[i][q]) ++phi_[i][p];
    }

  // Depths by BFS from the letter 1.
  std::vector<bool> seen(n, false);
  depth_.assign(n, rs.zero_root());
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t p = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rs.dim(); ++i) {
      std::size_t q = f_[i][p];
      if (q == npos) continue;
      RootVector d = depth_[p] + rs.simple_root(static_cast<int>(i + 1));
      if (seen[q]) {
        if (depth_[q] != d) throw Error(ErrorCode::InvalidArgument, "inconsistent letter weights");
        continue;
      }
      seen[q] = true;
      depth_[q] = d;
      queue.push_back(q);
    }
  }
}

void FundamentalCrystal::add_edge(int i, int from, int to) {
  std::size_t a = lookup_[static_cast<std::size_t>(from + offset_)];
  std::size_t b = lookup_[static_cast<std::size_t>(to + offset_)];
  f_[static_cast<std::size_t>(i - 1)][a] = b;
  e_[static_cast<std::size_t>(i - 1)][b] = a;
}

bool FundamentalCrystal::contains(Letter x) const {
  int k = x.value + offset_;
  return k >= 0 && k < static_cast<int>(lookup_.size()) && lookup_[static_cast<std::size_t>(k)] != npos;
}

std::size_t FundamentalCrystal::position(Letter x) const {
  if (!contains(x))
    throw Error(ErrorCode::InvalidArgument, "letter " + x.to_string() + " is not in the alphabet of " + type().name());
  return pos_unchecked(x);
}

bool FundamentalCrystal::comparable(Letter x, Letter y) const {
  if (!d_pair_) return true;
  std::size_t a = position(x), b = position(y);
  return !((a == *d_pair_ && b == *d_pair_ + 1) || (b == *d_pair_ && a == *d_pair_ + 1));
}

bool FundamentalCrystal::precedes(Letter x, Letter y) const {
  return comparable(x, y) && position(x) < position(y);
}

std::optional<Letter> FundamentalCrystal::f(int i, Letter x) const {
  rs_.check_index(i);
  std::size_t q = f_[static_cast<std::size_t>(i - 1)][position(x)];
  if (q == npos) return std::nullopt;
  return alphabet_[q];
}

std::optional<Letter> FundamentalCrystal::e(int i, Letter x) const {
  rs_.check_index(i);
  std::size_t q = e_[static_cast<std::size_t>(i - 1)][position(x)];
  if (q == npos) return std::nullopt;
  return alphabet_[q];
}

int FundamentalCrystal::eps(int i, Letter x) const {
  rs_.check_index(i);
  return eps_[static_cast<std::size_t>(i - 1)][position(x)];
}

int FundamentalCrystal::phi(int i, Letter x) const {
  rs_.check_index(i);
  return phi_[static_cast<std::size_t>(i - 1)][position(x)];
}

WeightVector FundamentalCrystal::weight(Letter x) const {
  return WeightVector::unit(rs_.dim(), 1) - rs_.to_weight(depth(x));
}

std::vector<FundamentalCrystal::Edge> FundamentalCrystal::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < f_.size(); ++i)
    for (std::size_t p = 0; p < alphabet_.size(); ++p)
      if (f_[i][p] != npos) out.push_back(Edge{alphabet_[p], static_cast<int>(i + 1), alphabet_[f_[i][p]]});
  return out;
}

Signature FundamentalCrystal::signature(int i, std::span<const Letter> word) const {
  rs_.check_index(i);
  const auto& eps_i = eps_[static_cast<std::size_t>(i - 1)];
  const auto& phi_i = phi_[static_cast<std::size_t>(i - 1)];
  Signature sig;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    std::size_t p = position(word[pos]);
    for (int m = 0; m < eps_i[p]; ++m) {
      if (!sig.plus.empty())
        sig.plus.pop_back();  // cancels against the nearest + on its left
      else
        sig.minus.push_back(pos);
    }
    for (int m = 0; m < phi_i[p]; ++m) sig.plus.push_back(pos);
  }
  return sig;
}

std::optional<std::size_t> FundamentalCrystal::f_position(int i, std::span<const Letter> word) const {
  Signature sig = signature(i, word);
  if (sig.plus.empty()) return std::nullopt;
  return sig.plus.front();
}

std::optional<std::size_t> FundamentalCrystal::e_position(int i, std::span<const Letter> word) const {
  Signature sig = signature(i, word);
  if (sig.minus.empty()) return std::nullopt;
  return sig.minus.back();
}

std::optional<std::vector<Letter>> FundamentalCrystal::word_f(int i, std::span<const Letter> word) const {
  auto pos = f_position(i, word);
  if (!pos) return std::nullopt;
  std::vector<Letter> out(word.begin(), word.end());
  out[*pos] = *f(i, out[*pos]);
  return out;
}

std::optional<std::vector<Letter>> FundamentalCrystal::word_e(int i, std::span<const Letter> word) const {
  auto pos = e_position(i, word);
  if (!pos) return std::nullopt;
  std::vector<Letter> out(word.begin(), word.end());
  out[*pos] = *e(i, out[*pos]);
  return out;
}

int FundamentalCrystal::word_eps(int i, std::span<const Letter> word) const {
  return static_cast<int>(signature(i, word).minus.size());
}

int FundamentalCrystal::word_phi(int i, std::span<const Letter> word) const {
  return static_cast<int>(signature(i, word).plus.size());
}

}  // namespace binf
