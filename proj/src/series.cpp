#include "binf/series.hpp"

#include <set>

#include "binf/error.hpp"
#include "binf/weyl.hpp"

namespace binf {

TruncatedSeries::TruncatedSeries(std::size_t rank, int bound) : rank_(rank), bound_(bound) {
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "series bound must be nonnegative");
}

TruncatedSeries TruncatedSeries::one(std::size_t rank, int bound) {
  TruncatedSeries s(rank, bound);
  s.add(RootVector(rank), IntPoly::constant(1));
  return s;
}

IntPoly TruncatedSeries::coeff(const RootVector& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? IntPoly() : it->second;
}

void TruncatedSeries::add(const RootVector& mu, const IntPoly& c) {
  if (mu.rank() != rank_) throw Error(ErrorCode::InvalidArgument, "series term has the wrong rank");
  if (!mu.is_nonnegative()) throw Error(ErrorCode::InvalidArgument, "series exponent " + mu.to_string() + " is not in Q+");
  if (mu.height() > bound_ || c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.rank_ != rank_) throw Error(ErrorCode::InvalidArgument, "series ranks differ");
  for (const auto& [mu, c] : o.terms_) add(mu, c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.rank_ != b.rank_) throw Error(ErrorCode::InvalidArgument, "series ranks differ");
  TruncatedSeries out(a.rank_, std::min(a.bound_, b.bound_));
  for (const auto& [mu, c] : a.terms_) {
    const int h = mu.height();
    for (const auto& [nu, d] : b.terms_)
      if (h + nu.height() <= out.bound_) out.add(mu + nu, c * d);
  }
  return out;
}

TruncatedSeries TruncatedSeries::substitute(IntPoly::Coeff value) const {
  TruncatedSeries out(rank_, bound_);
  for (const auto& [mu, c] : terms_) out.add(mu, IntPoly::constant(c.eval(value)));
  return out;
}

namespace {

TruncatedSeries product(const RootSystem& rs, int bound, const IntPoly& tail) {
  TruncatedSeries acc = TruncatedSeries::one(rs.dim(), bound);
  for (const auto& root : rs.positive_roots()) {
    TruncatedSeries factor = TruncatedSeries::one(rs.dim(), bound);
    const int h = root.vector.height();
    for (int k = 1; k * h <= bound; ++k) factor.add(k * root.vector, tail);
    acc = acc * factor;
  }
  return acc;
}

}  // namespace

TruncatedSeries lhs_product(const RootSystem& rs, int bound) { return product(rs, bound, IntPoly{1, -1}); }

TruncatedSeries partition_generating_series(const RootSystem& rs, int bound) {
  return product(rs, bound, IntPoly::constant(1));
}

TruncatedSeries rhs_tableau_sum(const KostantBijection& bij, int bound, TableauSource source, unsigned threads) {
  const TInfinity& crystal = bij.crystal();
  TruncatedSeries out(crystal.root_system().dim(), bound);
  auto add = [&](const Tableau& t) { out.add(-crystal.weight(t), IntPoly::one_minus_x_pow(bij.seg(t))); };
  if (source == TableauSource::CrystalBfs) {
    for (const auto& t : crystal.enumerate(bound, TInfinity::kDefaultNodeLimit, threads)) add(t);
  } else {
    for_each_partition_up_to(crystal.root_system(), bound, [&](const KostantPartition& kp) { add(bij.upsilon(kp)); });
  }
  return out;
}

TruncatedSeries rhs_lusztig_sum(const RootSystem& rs, const LongWord& word, int bound) {
  TruncatedSeries out(rs.dim(), bound);
  const auto& betas = word.beta_indices();
  const std::size_t n = betas.size();
  LusztigDatum d{word.word(), std::vector<int>(n, 0)};
  // Depth-first over c_1, ..., c_N with the remaining height budget.
  auto rec = [&](auto&& self, std::size_t j, int budget) -> void {
    if (j == n) {
      RootVector mu = rs.zero_root();
      for (std::size_t m = 0; m < n; ++m) mu += d.coords[m] * rs.root(betas[m]).vector;
      out.add(mu, IntPoly::one_minus_x_pow(nz(d)));
      return;
    }
    const int h = rs.root(betas[j]).vector.height();
    for (int c = 0; c * h <= budget; ++c) {
      d.coords[j] = c;
      self(self, j + 1, budget - c * h);
    }
    d.coords[j] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

GkReport verify_gk(const LieType& type, int bound, std::optional<std::vector<int>> word, unsigned threads) {
  KostantBijection bij(type);
  const RootSystem& rs = bij.root_system();
  LongWord w(rs, word && !word->empty() ? *word : default_long_word(rs));

  GkReport report{type, bound, w.word(), lhs_product(rs, bound), 0, {}};
  const TruncatedSeries bfs = rhs_tableau_sum(bij, bound, TableauSource::CrystalBfs, threads);
  const TruncatedSeries ups = rhs_tableau_sum(bij, bound, TableauSource::Upsilon, threads);
  const TruncatedSeries lus = rhs_lusztig_sum(rs, w, bound);
  for (const auto& [mu, c] : bfs.terms()) report.tableau_count += static_cast<std::size_t>(c.eval(0));

  std::set<RootVector> keys;
  for (const TruncatedSeries* s : {static_cast<const TruncatedSeries*>(&report.lhs), &bfs, &ups, &lus})
    for (const auto& [mu, c] : s->terms()) keys.insert(mu);
  for (const auto& mu : keys) {
    GkDiscrepancy d{mu, report.lhs.coeff(mu), bfs.coeff(mu), ups.coeff(mu), lus.coeff(mu)};
    if (d.lhs != d.tableau_bfs || d.lhs != d.tableau_upsilon || d.lhs != d.lusztig) report.discrepancies.push_back(d);
  }
  return report;
}

}  // namespace binf
