#include "binf/symfunc.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "binf/error.hpp"

namespace binf {

SymFunc::SymFunc(LieType type) : bij_(type), weyl_(RootSystem(type)) {}

IntPoly SymFunc::q_kostant(const RootVector& mu, QKostantMode mode) const {
  const RootSystem& rs = root_system();
  if (mu.rank() != rs.dim()) throw Error(ErrorCode::InvalidArgument, "mu has the wrong rank");
  if (!mu.is_nonnegative()) return IntPoly();

  if (mode == QKostantMode::Tableau) {
    std::vector<IntPoly::Coeff> c;
    for_each_partition(rs, mu, [&](const KostantPartition& kp) {
      const Tableau t = bij_.upsilon(kp);
      if (-bij_.crystal().weight(t) != mu)
        throw Error(ErrorCode::InvalidArgument, "Upsilon produced a tableau of the wrong weight");
      const auto n = static_cast<std::size_t>(bij_.content(t));
      if (n >= c.size()) c.resize(n + 1, 0);
      ++c[n];
    });
    return IntPoly(std::move(c));
  }

  if (auto it = qk_cache_.find(mu); it != qk_cache_.end()) return it->second;
  // Coefficient of z^mu in prod (1 - q z^a)^{-1} over the box [0, mu].
  const std::size_t n = rs.dim();
  std::vector<std::size_t> stride(n);
  std::size_t size = 1;
  for (std::size_t k = 0; k < n; ++k) {
    stride[k] = size;
    size *= static_cast<std::size_t>(mu[k] + 1);
  }
  std::vector<IntPoly> dp(size);
  dp[0] = IntPoly::constant(1);
  const IntPoly q = IntPoly::monomial(1);
  for (const auto& root : rs.positive_roots()) {
    std::size_t shift = 0;
    for (std::size_t k = 0; k < n; ++k) shift += static_cast<std::size_t>(root.vector[k]) * stride[k];
    for (std::size_t idx = 0; idx < size; ++idx) {
      bool fits = true;
      for (std::size_t k = 0; k < n && fits; ++k)
        fits = static_cast<int>(idx / stride[k] % static_cast<std::size_t>(mu[k] + 1)) >= root.vector[k];
      if (fits && !dp[idx - shift].is_zero()) dp[idx] += q * dp[idx - shift];
    }
  }
  return qk_cache_.emplace(mu, dp[size - 1]).first->second;
}

IntPoly SymFunc::q_kostant_weight(const WeightVector& mu, QKostantMode mode) const {
  auto r = root_system().to_root(mu);
  if (!r) return IntPoly();
  return q_kostant(*r, mode);
}

bool SymFunc::is_dominant(const WeightVector& w) const { return w.is_nonnegative(); }

void SymFunc::require_dominant(const WeightVector& w, const char* what) const {
  if (w.rank() != root_system().dim())
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " has " + std::to_string(w.rank()) +
                                                " coordinates, expected " + std::to_string(root_system().dim()));
  if (!is_dominant(w)) throw Error(ErrorCode::InvalidArgument, std::string(what) + " = " + w.to_string() + " is not dominant");
}

bool SymFunc::dominates(const WeightVector& lambda, const WeightVector& mu) const {
  auto r = root_system().to_root(lambda - mu);
  return r && r->is_nonnegative();
}

WeightVector SymFunc::dominant_conjugate(WeightVector w) const {
  const RootSystem& rs = root_system();
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i <= rs.rank(); ++i)
      if (w[static_cast<std::size_t>(i - 1)] < 0) {
        w = rs.reflect(i, w);
        moved = true;
      }
  }
  return w;
}

std::vector<WeightVector> SymFunc::weights(const WeightVector& lambda) const {
  require_dominant(lambda, "lambda");
  const RootSystem& rs = root_system();
  std::set<WeightVector> seen{lambda};
  std::deque<WeightVector> queue{lambda};
  while (!queue.empty()) {
    WeightVector mu = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      WeightVector next = mu - rs.to_weight(rs.simple_root(i));
      if (seen.count(next) || !dominates(lambda, dominant_conjugate(next))) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<WeightVector> SymFunc::dominant_weights_below(const WeightVector& lambda) const {
  std::vector<WeightVector> out;
  for (const auto& mu : weights(lambda))
    if (is_dominant(mu)) out.push_back(mu);
  auto depth = [&](const WeightVector& mu) { return root_system().to_root(lambda - mu)->height(); };
  std::sort(out.begin(), out.end(), [&](const WeightVector& a, const WeightVector& b) {
    return depth(a) != depth(b) ? depth(a) < depth(b) : a < b;
  });
  return out;
}

const std::map<WeightVector, long long>& SymFunc::dominant_multiplicities(const WeightVector& lambda) const {
  if (auto it = mult_cache_.find(lambda); it != mult_cache_.end()) return it->second;
  const RootSystem& rs = root_system();
  const WeightVector two_rho = rs.to_weight(rs.two_rho());
  std::map<WeightVector, long long> m;
  for (const auto& mu : dominant_weights_below(lambda)) {
    if (mu == lambda) {
      m[mu] = 1;
      continue;
    }
    long long num = 0;
    for (const auto& root : rs.positive_roots()) {
      const WeightVector alpha = rs.to_weight(root.vector);
      for (WeightVector nu = mu + alpha;; nu += alpha) {
        const WeightVector dom = dominant_conjugate(nu);
        if (!dominates(lambda, dom)) break;
        num += 2 * m.at(dom) * rs.inner(nu, root.vector);
      }
    }
    const long long den = rs.inner(lambda + mu + two_rho, *rs.to_root(lambda - mu));
    if (den <= 0 || num % den != 0)
      throw Error(ErrorCode::InvalidArgument, "Freudenthal recursion failed at " + mu.to_string());
    m[mu] = num / den;
  }
  return mult_cache_.emplace(lambda, std::move(m)).first->second;
}

long long SymFunc::multiplicity(const WeightVector& lambda, const WeightVector& mu) const {
  require_dominant(lambda, "lambda");
  const auto& m = dominant_multiplicities(lambda);
  auto it = m.find(dominant_conjugate(mu));
  return it == m.end() ? 0 : it->second;
}

long long SymFunc::weyl_dimension(const WeightVector& lambda) const {
  require_dominant(lambda, "lambda");
  const RootSystem& rs = root_system();
  const WeightVector rho = rs.rho();
  Rational d(1);
  for (const auto& root : rs.positive_roots())
    d *= Rational(rs.inner(lambda + rho, root.vector), rs.inner(rho, root.vector));
  return d.numerator();
}

WeightLaurentPoly SymFunc::character(const WeightVector& lambda) const {
  WeightLaurentPoly chi;
  for (const auto& mu : weights(lambda)) chi[mu] = IntPoly::constant(multiplicity(lambda, mu));
  return chi;
}

IntPoly SymFunc::kostka_foulkes(const WeightVector& lambda, const WeightVector& mu) const {
  require_dominant(lambda, "lambda");
  require_dominant(mu, "mu");
  const WeightVector rho = root_system().rho();
  IntPoly k;
  for (const auto& w : weyl_.elements()) {
    IntPoly p = q_kostant_weight(w.apply(lambda + rho) - (mu + rho));
    if (p.is_zero()) continue;
    if (w.length() % 2) k -= p;
    else k += p;
  }
  return k;
}

WeightLaurentPoly SymFunc::hall_littlewood(const WeightVector& mu) const {
  require_dominant(mu, "mu");
  if (auto it = hl_cache_.find(mu); it != hl_cache_.end()) return it->second;
  WeightLaurentPoly p = character(mu);
  for (const auto& nu : dominant_weights_below(mu)) {
    if (nu == mu) continue;
    IntPoly k = kostka_foulkes(mu, nu);
    if (!k.is_zero()) add_scaled(p, hall_littlewood(nu), -k);
  }
  return hl_cache_.emplace(mu, std::move(p)).first->second;
}

void add_scaled(WeightLaurentPoly& acc, const WeightLaurentPoly& p, const IntPoly& c) {
  for (const auto& [w, coeff] : p) {
    IntPoly& slot = acc[w];
    slot += c * coeff;
    if (slot.is_zero()) acc.erase(w);
  }
}

WeightLaurentPoly evaluate_q(const WeightLaurentPoly& p, IntPoly::Coeff value) {
  WeightLaurentPoly out;
  for (const auto& [w, c] : p) {
    const auto v = c.eval(value);
    if (v != 0) out[w] = IntPoly::constant(v);
  }
  return out;
}

}  // namespace binf
