#include "binf/kostant.hpp"

#include <algorithm>

#include "binf/error.hpp"

namespace binf {

int KostantPartition::distinct_parts() const {
  return static_cast<int>(std::count_if(mults.begin(), mults.end(), [](int c) { return c != 0; }));
}

int KostantPartition::total() const {
  int s = 0;
  for (int c : mults) s += c;
  return s;
}

KostantPartition& KostantPartition::operator+=(const KostantPartition& o) {
  if (mults.size() < o.mults.size()) mults.resize(o.mults.size(), 0);
  for (std::size_t k = 0; k < o.mults.size(); ++k) mults[k] += o.mults[k];
  return *this;
}

std::size_t KostantPartition::Hash::operator()(const KostantPartition& kp) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int c : kp.mults) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
  return h;
}

std::string root_expression(const RootVector& v) {
  std::string s;
  for (std::size_t k = 0; k < v.rank(); ++k) {
    const int c = v[k];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0) s += "-";
    const int a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    s += "a" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

std::string format_partition(const RootSystem& rs, const KostantPartition& kp) {
  std::vector<std::size_t> parts;
  for (std::size_t k = 0; k < kp.size(); ++k)
    if (kp[k] != 0) parts.push_back(k);
  auto lead = [&](std::size_t k) {
    const auto& c = rs.root(k).vector.coeffs();
    return std::find_if(c.begin(), c.end(), [](int x) { return x != 0; }) - c.begin();
  };
  std::sort(parts.begin(), parts.end(), [&](std::size_t a, std::size_t b) {
    if (lead(a) != lead(b)) return lead(a) < lead(b);
    return rs.root(a).vector < rs.root(b).vector;
  });
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t k : parts) {
    if (!s.empty()) s += " + ";
    if (kp[k] != 1) s += std::to_string(kp[k]);
    s += "(" + root_expression(rs.root(k).vector) + ")";
  }
  return s;
}

RootVector pr(const RootSystem& rs, const KostantPartition& kp) {
  if (kp.size() != rs.num_positive_roots())
    throw Error(ErrorCode::InvalidArgument, "partition has " + std::to_string(kp.size()) + " entries, " +
                                                rs.type().name() + " has " +
                                                std::to_string(rs.num_positive_roots()) + " positive roots");
  RootVector v = rs.zero_root();
  for (std::size_t k = 0; k < kp.size(); ++k) v -= kp[k] * rs.root(k).vector;
  return v;
}

KostantBijection::KostantBijection(LieType type) : crystal_(type) {
  const RootSystem& rs = crystal_.root_system();
  const int r = rs.rank();
  auto beta = [&](int i, int k) { return rs.label_index(RootLabel{RootLabel::Kind::Beta, i, k}); };
  auto gamma = [&](int i, int k) { return rs.label_index(RootLabel{RootLabel::Kind::Gamma, i, k}); };
  auto g2 = [&](int m) { return rs.label_index(RootLabel{RootLabel::Kind::G2, m, 0}); };
  auto one = [](int x, std::size_t idx) { return Rule{Letter{x}, {{idx, 1}}}; };

  rules_.resize(static_cast<std::size_t>(crystal_.num_rows()));
  for (int i = 1; i <= crystal_.num_rows(); ++i) {
    auto& rules = rules_[static_cast<std::size_t>(i - 1)];
    switch (type.family()) {
      case Family::A:
        for (int k = i + 1; k <= r + 1; ++k) rules.push_back(one(k, beta(i, k - 1)));
        break;
      case Family::B:
        for (int k = i + 1; k <= r; ++k) rules.push_back(one(k, beta(i, k - 1)));
        rules.push_back(one(0, beta(i, r)));
        for (int k = r; k > i; --k) rules.push_back(one(-k, gamma(i, k)));
        rules.push_back(Rule{Letter{-i}, {{beta(i, r), 2}}});
        break;
      case Family::C:
        for (int k = i + 1; k <= r; ++k) rules.push_back(one(k, beta(i, k - 1)));
        for (int k = r; k >= i; --k) rules.push_back(one(-k, gamma(i, k)));
        break;
      case Family::D:
        for (int k = i + 1; k <= r - 1; ++k) rules.push_back(one(k, beta(i, k - 1)));
        rules.push_back(one(r, beta(i, r - 1)));
        rules.push_back(one(-r, beta(i, r)));
        for (int k = r - 1; k > i; --k) rules.push_back(one(-k, gamma(i, k)));
        rules.push_back(Rule{Letter{-i}, {{beta(i, r - 1), 1}, {beta(i, r), 1}}});
        break;
      case Family::G:
        if (i == 1) {
          rules = {one(2, g2(0)), one(3, g2(1)), one(0, g2(2)), one(-3, g2(3)), one(-2, g2(4)),
                   Rule{Letter{-1}, {{g2(2), 2}}}};
        } else {
          rules = {one(3, g2(5))};
        }
        break;
    }
  }
}

std::vector<int> KostantBijection::row_lengths(const Tableau& t, int i) const {
  const auto& rules = rules_[static_cast<std::size_t>(i - 1)];
  const Row& row = t.row(i);
  std::vector<int> len(rules.size(), 0);
  for (std::size_t m = 0; m < rules.size(); ++m)
    len[m] = static_cast<int>(std::count(row.begin(), row.end(), rules[m].letter));
  return len;
}

std::vector<Segment> KostantBijection::segments(const Tableau& t) const {
  if (t.type() != crystal_.type())
    throw Error(ErrorCode::InvalidArgument, "tableau of type " + t.type().name() + " used with " + crystal_.type().name());
  std::vector<Segment> out;
  for (int i = 1; i <= t.num_rows(); ++i) {
    const auto len = row_lengths(t, i);
    const auto& rules = rules_[static_cast<std::size_t>(i - 1)];
    for (std::size_t m = 0; m < rules.size(); ++m)
      if (len[m] > 0) out.push_back(Segment{i, rules[m].letter, len[m]});
  }
  return out;
}

int KostantBijection::ell(const Tableau& t, int i, Letter k) const {
  if (i < 1 || i > t.num_rows())
    throw Error(ErrorCode::InvalidArgument, "row " + std::to_string(i) + " out of range");
  if (k == Letter{i}) return 0;
  const Row& row = t.row(i);
  return static_cast<int>(std::count(row.begin(), row.end(), k));
}

SegStats KostantBijection::seg_stats(const Tableau& t) const {
  SegStats s;
  const int r = crystal_.type().rank();
  s.seg_prime = static_cast<int>(segments(t).size());
  for (int i = 1; i <= t.num_rows(); ++i) {
    auto has = [&](int x) { return ell(t, i, Letter{x}) > 0; };
    switch (crystal_.type().family()) {
      case Family::B:
        if (has(0) && has(-i)) ++s.correction;
        break;
      case Family::D:
        if (has(-i) && !has(r) && !has(-r)) ++s.correction;
        break;
      case Family::G:
        if (i == 1 && has(0) && has(-1)) ++s.correction;
        break;
      default:
        break;
    }
  }
  s.seg = crystal_.type().family() == Family::D ? s.seg_prime + s.correction : s.seg_prime - s.correction;
  return s;
}

KostantPartition KostantBijection::xi(const Tableau& t) const {
  KostantPartition kp(root_system().num_positive_roots());
  for (int i = 1; i <= t.num_rows(); ++i) {
    const auto len = row_lengths(t, i);
    const auto& rules = rules_[static_cast<std::size_t>(i - 1)];
    for (std::size_t m = 0; m < rules.size(); ++m)
      for (auto [idx, mult] : rules[m].parts) kp[idx] += mult * len[m];
  }
  return kp;
}

Tableau KostantBijection::upsilon(const KostantPartition& kp) const {
  const RootSystem& rs = root_system();
  if (kp.size() != rs.num_positive_roots())
    throw Error(ErrorCode::InvalidArgument, "partition has " + std::to_string(kp.size()) + " entries, " +
                                                rs.type().name() + " has " +
                                                std::to_string(rs.num_positive_roots()) + " positive roots");
  for (int c : kp.mults)
    if (c < 0) throw Error(ErrorCode::InvalidArgument, "partition multiplicities must be nonnegative");

  const int r = rs.rank();
  std::vector<Row> reduced;
  for (int i = 1; i <= crystal_.num_rows(); ++i) {
    const auto& rules = rules_[static_cast<std::size_t>(i - 1)];
    std::vector<int> len(rules.size(), 0);
    auto at = [&](int x) -> int& {
      for (std::size_t m = 0; m < rules.size(); ++m)
        if (rules[m].letter == Letter{x}) return len[m];
      throw Error(ErrorCode::InvalidArgument, "no rule for letter " + std::to_string(x));
    };
    for (std::size_t m = 0; m < rules.size(); ++m)
      if (rules[m].parts.size() == 1 && rules[m].parts[0].second == 1) len[m] = kp[rules[m].parts[0].first];

    switch (rs.type().family()) {
      case Family::B: {
        const int c = kp[rs.label_index(RootLabel{RootLabel::Kind::Beta, i, r})];
        at(-i) = c / 2;
        at(0) = c % 2;
        break;
      }
      case Family::D: {
        const int a = kp[rs.label_index(RootLabel{RootLabel::Kind::Beta, i, r - 1})];
        const int b = kp[rs.label_index(RootLabel{RootLabel::Kind::Beta, i, r})];
        at(r) = std::max(0, a - b);
        at(-r) = std::max(0, b - a);
        at(-i) = std::min(a, b);
        break;
      }
      case Family::G:
        if (i == 1) {
          const int c = kp[rs.label_index(RootLabel{RootLabel::Kind::G2, 2, 0})];
          at(-1) = c / 2;
          at(0) = c % 2;
        }
        break;
      default:
        break;
    }

    Row row;
    for (std::size_t m = 0; m < rules.size(); ++m) row.insert(row.end(), static_cast<std::size_t>(len[m]), rules[m].letter);
    reduced.push_back(std::move(row));
  }
  return crystal_.from_reduced(reduced);
}

int KostantBijection::content(const Tableau& t) const {
  const bool doubled = crystal_.type().family() != Family::C;
  int n = 0;
  for (const auto& s : segments(t)) n += doubled && s.letter == Letter{-s.row} ? 2 * s.length : s.length;
  return n;
}

namespace {

void partitions_of(const RootSystem& rs, std::size_t j, RootVector& rest, KostantPartition& kp,
                   const std::function<void(const KostantPartition&)>& fn) {
  if (j == rs.num_positive_roots()) {
    if (rest.is_zero()) fn(kp);
    return;
  }
  const RootVector& beta = rs.root(j).vector;
  int added = 0;
  for (;;) {
    partitions_of(rs, j + 1, rest, kp, fn);
    rest -= beta;
    if (!rest.is_nonnegative()) break;
    ++kp[j];
    ++added;
  }
  rest += beta;
  rest += added * beta;
  kp[j] = 0;
}

void partitions_up_to(const RootSystem& rs, std::size_t j, int budget, KostantPartition& kp,
                      const std::function<void(const KostantPartition&)>& fn) {
  if (j == rs.num_positive_roots()) {
    fn(kp);
    return;
  }
  const int h = rs.root(j).vector.height();
  for (int m = 0; m * h <= budget; ++m) {
    kp[j] = m;
    partitions_up_to(rs, j + 1, budget - m * h, kp, fn);
  }
  kp[j] = 0;
}

}  // namespace

void for_each_partition(const RootSystem& rs, const RootVector& mu,
                        const std::function<void(const KostantPartition&)>& fn) {
  if (!mu.is_nonnegative()) return;
  RootVector rest = mu;
  KostantPartition kp(rs.num_positive_roots());
  partitions_of(rs, 0, rest, kp, fn);
}

void for_each_partition_up_to(const RootSystem& rs, int max_height,
                              const std::function<void(const KostantPartition&)>& fn) {
  if (max_height < 0) return;
  KostantPartition kp(rs.num_positive_roots());
  partitions_up_to(rs, 0, max_height, kp, fn);
}

long long kostant_count(const RootSystem& rs, const RootVector& mu) {
  if (!mu.is_nonnegative()) return 0;
  // Unbounded knapsack over the box [0, mu] in mixed-radix indexing.
  const std::size_t n = rs.dim();
  std::vector<std::size_t> stride(n);
  std::size_t size = 1;
  for (std::size_t k = 0; k < n; ++k) {
    stride[k] = size;
    size *= static_cast<std::size_t>(mu[k] + 1);
  }
  std::vector<long long> dp(size, 0);
  dp[0] = 1;
  std::vector<int> cur(n);
  for (const auto& root : rs.positive_roots()) {
    std::size_t shift = 0;
    for (std::size_t k = 0; k < n; ++k) shift += static_cast<std::size_t>(root.vector[k]) * stride[k];
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::size_t rem = idx;
      bool fits = true;
      for (std::size_t k = n; k-- > 0;) {
        const auto coord = static_cast<int>(rem / stride[k]);
        rem %= stride[k];
        if (coord < root.vector[k]) fits = false;
      }
      if (fits) dp[idx] += dp[idx - shift];
    }
  }
  return dp[size - 1];
}

}  // namespace binf
