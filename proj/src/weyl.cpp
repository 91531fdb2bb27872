#include "binf/weyl.hpp"

#include <unordered_set>

#include "binf/error.hpp"

namespace binf {

namespace {

constexpr int kM = WeylElement::kMaxRank;

std::size_t at(int row, int col) { return static_cast<std::size_t>(row * kM + col); }

std::int8_t narrow(int v) {
  if (v < -127 || v > 127) throw Error(ErrorCode::LimitExceeded, "Weyl group matrix entry out of range");
  return static_cast<std::int8_t>(v);
}

// Root-lattice matrix of a running product w, used for ascent tests and
// long-word generation. Column j is w(alpha_j).
class RunningProduct {
 public:
  explicit RunningProduct(const RootSystem& rs) : rs_(rs), n_(rs.dim()), m_(n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) m_[i * n_ + i] = 1;
  }

  // w(alpha_i) > 0
  bool is_ascent(int i) const {
    const auto c = static_cast<std::size_t>(i - 1);
    for (std::size_t r = 0; r < n_; ++r)
      if (m_[r * n_ + c] < 0) return false;
    return true;
  }

  // w <- w s_i ; column j becomes col_j - a_ij col_i.
  void multiply_right(int i) {
    const auto c = static_cast<std::size_t>(i - 1);
    std::vector<int> col_i(n_);
    for (std::size_t r = 0; r < n_; ++r) col_i[r] = m_[r * n_ + c];
    for (std::size_t j = 0; j < n_; ++j) {
      int a = rs_.cartan()[c][j];
      if (a == 0) continue;
      for (std::size_t r = 0; r < n_; ++r) m_[r * n_ + j] -= a * col_i[r];
    }
  }

 private:
  const RootSystem& rs_;
  std::size_t n_;
  std::vector<int> m_;
};

void collect_words(const RootSystem& rs, RunningProduct w, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out, std::size_t limit) {
  bool any = false;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (!w.is_ascent(i)) continue;
    any = true;
    RunningProduct next = w;
    next.multiply_right(i);
    prefix.push_back(i);
    collect_words(rs, next, prefix, out, limit);
    prefix.pop_back();
  }
  if (!any) {
    if (out.size() >= limit) throw Error(ErrorCode::LimitExceeded, "too many long words");
    out.push_back(prefix);
  }
}

}  // namespace

RootVector WeylElement::apply(const RootVector& v) const {
  RootVector out(v.rank());
  for (int r = 0; r < rank_; ++r) {
    int s = 0;
    for (int c = 0; c < rank_; ++c) s += root_[at(r, c)] * v[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

WeightVector WeylElement::apply(const WeightVector& v) const {
  WeightVector out(v.rank());
  for (int r = 0; r < rank_; ++r) {
    int s = 0;
    for (int c = 0; c < rank_; ++c) s += weight_[at(r, c)] * v[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

std::size_t WeylElement::Hash::operator()(const WeylElement& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int r = 0; r < w.rank_; ++r)
    for (int c = 0; c < w.rank_; ++c) h = (h ^ static_cast<std::uint8_t>(w.root_[at(r, c)])) * 1099511628211ULL;
  return h;
}

std::size_t WeylGroup::order(const LieType& type) {
  std::size_t fact = 1;
  const auto r = static_cast<std::size_t>(type.rank());
  for (std::size_t k = 2; k <= r; ++k) fact *= k;
  switch (type.family()) {
    case Family::A: return fact * (r + 1);
    case Family::B:
    case Family::C: return fact << r;
    case Family::D: return fact << (r - 1);
    case Family::G: return 12;
  }
  return 0;
}

WeylGroup::WeylGroup(const RootSystem& rs, std::size_t limit) {
  const std::size_t expected = order(rs.type());
  if (expected > limit)
    throw Error(ErrorCode::LimitExceeded, "Weyl group of " + rs.type().name() + " has " + std::to_string(expected) +
                                              " elements, over the limit of " + std::to_string(limit));
  const int n = rs.rank();
  const auto& a = rs.cartan();

  WeylElement id;
  id.rank_ = n;
  for (int i = 0; i < n; ++i) {
    id.root_[at(i, i)] = 1;
    id.weight_[at(i, i)] = 1;
  }
  elements_.reserve(expected);
  elements_.push_back(id);
  std::unordered_set<WeylElement, WeylElement::Hash> seen{id};

  std::size_t begin = 0;
  while (begin < elements_.size()) {
    const std::size_t end = elements_.size();
    for (std::size_t e = begin; e < end; ++e) {
      for (int i = 0; i < n; ++i) {
        WeylElement w = elements_[e];
        // s_i w: on roots only row i changes, row_i <- row_i - sum_j a_ij row_j.
        for (int c = 0; c < n; ++c) {
          int s = 0;
          for (int j = 0; j < n; ++j) s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * elements_[e].root_[at(j, c)];
          w.root_[at(i, c)] = narrow(elements_[e].root_[at(i, c)] - s);
        }
        // On weights: row r <- row_r - a_ri row_i.
        for (int r = 0; r < n; ++r) {
          int coef = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
          if (coef == 0) continue;
          for (int c = 0; c < n; ++c)
            w.weight_[at(r, c)] = narrow(elements_[e].weight_[at(r, c)] - coef * elements_[e].weight_[at(i, c)]);
        }
        w.length_ = elements_[e].length_ + 1;
        if (seen.insert(w).second) elements_.push_back(w);
      }
    }
    begin = end;
  }

  int max_len = -1;
  std::size_t count = 0;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k].length_ > max_len) {
      max_len = elements_[k].length_;
      longest_ = k;
      count = 1;
    } else if (elements_[k].length_ == max_len) {
      ++count;
    }
  }
  if (count != 1 || max_len != static_cast<int>(rs.num_positive_roots()))
    throw Error(ErrorCode::InvalidArgument, "Weyl group of " + rs.type().name() + " has no unique longest element");
}

IntPoly WeylGroup::poincare_polynomial() const {
  std::vector<IntPoly::Coeff> c;
  for (const auto& w : elements_) {
    if (static_cast<std::size_t>(w.length()) >= c.size()) c.resize(static_cast<std::size_t>(w.length()) + 1, 0);
    ++c[static_cast<std::size_t>(w.length())];
  }
  return IntPoly(std::move(c));
}

IntPoly stabilizer_poly(const WeylGroup& group, const WeightVector& mu) {
  std::vector<IntPoly::Coeff> c;
  for (const auto& w : group.elements()) {
    if (w.apply(mu) != mu) continue;
    if (static_cast<std::size_t>(w.length()) >= c.size()) c.resize(static_cast<std::size_t>(w.length()) + 1, 0);
    ++c[static_cast<std::size_t>(w.length())];
  }
  return IntPoly(std::move(c));
}

bool is_long_word(const RootSystem& rs, std::span<const int> word) {
  if (word.size() != rs.num_positive_roots()) return false;
  RunningProduct w(rs);
  for (int i : word) {
    if (i < 1 || i > rs.rank() || !w.is_ascent(i)) return false;
    w.multiply_right(i);
  }
  return true;
}

std::vector<std::size_t> beta_indices(const RootSystem& rs, std::span<const int> word) {
  if (!is_long_word(rs, word)) {
    std::string text;
    for (int i : word) text += (text.empty() ? "" : ",") + std::to_string(i);
    throw Error(ErrorCode::InvalidWord, "(" + text + ") is not a long word of " + rs.type().name());
  }
  std::vector<std::size_t> out;
  out.reserve(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    RootVector beta = rs.simple_root(word[j]);
    for (std::size_t m = j; m-- > 0;) beta = rs.reflect(word[m], beta);
    out.push_back(*rs.index_of(beta));
  }
  return out;
}

std::vector<PositiveRoot> beta_sequence(const RootSystem& rs, std::span<const int> word) {
  std::vector<PositiveRoot> out;
  for (std::size_t k : beta_indices(rs, word)) out.push_back(rs.root(k));
  return out;
}

std::vector<int> default_long_word(const RootSystem& rs) {
  RunningProduct w(rs);
  std::vector<int> word;
  for (;;) {
    int next = 0;
    for (int i = 1; i <= rs.rank() && !next; ++i)
      if (w.is_ascent(i)) next = i;
    if (!next) return word;
    w.multiply_right(next);
    word.push_back(next);
  }
}

std::vector<int> random_long_word(const RootSystem& rs, std::mt19937_64& rng) {
  RunningProduct w(rs);
  std::vector<int> word;
  std::vector<int> ascents;
  for (;;) {
    ascents.clear();
    for (int i = 1; i <= rs.rank(); ++i)
      if (w.is_ascent(i)) ascents.push_back(i);
    if (ascents.empty()) return word;
    std::uniform_int_distribution<std::size_t> pick(0, ascents.size() - 1);
    int i = ascents[pick(rng)];
    w.multiply_right(i);
    word.push_back(i);
  }
}

std::vector<std::vector<int>> all_long_words(const RootSystem& rs, std::size_t limit) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  collect_words(rs, RunningProduct(rs), prefix, out, limit);
  return out;
}

}  // namespace binf
