#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "binf/cartan.hpp"
#include "binf/kostant.hpp"

namespace binf {

/// A validated long word together with the root indices of its
/// beta-sequence.
class LongWord {
 public:
  /// Throws InvalidWord unless `word` is a reduced word for w0.
  LongWord(const RootSystem& rs, std::vector<int> word);

  const std::vector<int>& word() const { return word_; }
  /// beta_j as an index into RootSystem::positive_roots().
  const std::vector<std::size_t>& beta_indices() const { return betas_; }
  std::string to_string() const;

 private:
  std::vector<int> word_;
  std::vector<std::size_t> betas_;
};

/// Lusztig datum: c_j is the exponent attached to beta_j of `word`.
struct LusztigDatum {
  std::vector<int> word;
  std::vector<int> coords;

  friend bool operator==(const LusztigDatum&, const LusztigDatum&) = default;
};

int nz(const LusztigDatum& d);

LusztigDatum kostant_to_lusztig(const LongWord& w, const KostantPartition& kp);
/// Throws InvalidArgument when the datum was built for another word.
KostantPartition lusztig_to_kostant(const LongWord& w, const LusztigDatum& d);

LusztigDatum theta(const KostantBijection& bij, const LongWord& w, const Tableau& t);

/// -(sum of c_j beta_j)
RootVector lusztig_weight(const RootSystem& rs, const LongWord& w, const LusztigDatum& d);

}  // namespace binf
