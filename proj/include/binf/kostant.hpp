#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "binf/cartan.hpp"
#include "binf/tableau.hpp"

namespace binf {

/// A maximal run of `letter` boxes in one row, outside the forced prefix.
struct Segment {
  int row;
  Letter letter;
  int length;
};

/// Multiplicity vector over the positive roots, indexed like
/// RootSystem::positive_roots().
struct KostantPartition {
  std::vector<int> mults;

  KostantPartition() = default;
  explicit KostantPartition(std::size_t n) : mults(n, 0) {}

  std::size_t size() const { return mults.size(); }
  int operator[](std::size_t k) const { return mults[k]; }
  int& operator[](std::size_t k) { return mults[k]; }

  int distinct_parts() const;
  int total() const;
  bool empty() const { return total() == 0; }

  KostantPartition& operator+=(const KostantPartition& o);
  friend KostantPartition operator+(KostantPartition a, const KostantPartition& b) { return a += b; }
  friend bool operator==(const KostantPartition&, const KostantPartition&) = default;

  struct Hash {
    std::size_t operator()(const KostantPartition& kp) const noexcept;
  };
};

/// "a1+a2+2a3"; "0" for the zero vector.
std::string root_expression(const RootVector& v);
/// Parts sorted by leading simple root, then lexicographically:
/// "2(a1) + 7(a1+a2+a3) + (a1+a2+2a3)". The empty partition is "0".
std::string format_partition(const RootSystem& rs, const KostantPartition& kp);

/// -(sum of parts)
RootVector pr(const RootSystem& rs, const KostantPartition& kp);

struct SegStats {
  int seg_prime = 0;
  /// e_B for B, e_D for D, the 0/1-bar adjustment for G2, 0 otherwise.
  int correction = 0;
  int seg = 0;
};

/// The segment statistics, the bijection Xi: T(infinity) -> Kostant
/// partitions and its inverse Upsilon, for one type.
class KostantBijection {
 public:
  explicit KostantBijection(LieType type);

  const TInfinity& crystal() const { return crystal_; }
  const RootSystem& root_system() const { return crystal_.root_system(); }

  std::vector<Segment> segments(const Tableau& t) const;
  /// Number of k-boxes in row i outside the forced prefix.
  int ell(const Tableau& t, int i, Letter k) const;
  SegStats seg_stats(const Tableau& t) const;
  int seg(const Tableau& t) const { return seg_stats(t).seg; }

  KostantPartition xi(const Tableau& t) const;
  Tableau upsilon(const KostantPartition& kp) const;

  /// Boxes of the reduced form, an i-bar box in row i counting twice
  /// except in type C. Equals the total multiplicity of xi(t).
  int content(const Tableau& t) const;

 private:
  struct Rule {
    Letter letter;
    std::vector<std::pair<std::size_t, int>> parts;  // (root index, multiplier)
  };
  std::vector<int> row_lengths(const Tableau& t, int i) const;

  TInfinity crystal_;
  std::vector<std::vector<Rule>> rules_;  // [row - 1], letters in increasing order
};

/// Calls fn on every Kostant partition of mu (none unless mu is in Q+).
void for_each_partition(const RootSystem& rs, const RootVector& mu,
                        const std::function<void(const KostantPartition&)>& fn);
/// Calls fn on every Kostant partition whose sum has height <= max_height.
void for_each_partition_up_to(const RootSystem& rs, int max_height,
                              const std::function<void(const KostantPartition&)>& fn);
/// Number of Kostant partitions of mu; 0 off Q+.
long long kostant_count(const RootSystem& rs, const RootVector& mu);

}  // namespace binf
