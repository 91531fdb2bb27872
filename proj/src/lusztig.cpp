#include "binf/lusztig.hpp"

#include <algorithm>

#include "binf/error.hpp"
#include "binf/weyl.hpp"

namespace binf {

LongWord::LongWord(const RootSystem& rs, std::vector<int> word)
    : word_(std::move(word)), betas_(binf::beta_indices(rs, word_)) {}

std::string LongWord::to_string() const {
  std::string s;
  for (int i : word_) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

int nz(const LusztigDatum& d) {
  return static_cast<int>(std::count_if(d.coords.begin(), d.coords.end(), [](int c) { return c != 0; }));
}

LusztigDatum kostant_to_lusztig(const LongWord& w, const KostantPartition& kp) {
  if (kp.size() != w.beta_indices().size())
    throw Error(ErrorCode::InvalidArgument, "partition size does not match the long word");
  LusztigDatum d{w.word(), std::vector<int>(w.beta_indices().size(), 0)};
  for (std::size_t j = 0; j < d.coords.size(); ++j) d.coords[j] = kp[w.beta_indices()[j]];
  return d;
}

KostantPartition lusztig_to_kostant(const LongWord& w, const LusztigDatum& d) {
  if (d.word != w.word()) throw Error(ErrorCode::InvalidArgument, "datum belongs to a different long word");
  if (d.coords.size() != w.beta_indices().size())
    throw Error(ErrorCode::InvalidArgument, "datum has " + std::to_string(d.coords.size()) + " coordinates, expected " +
                                                std::to_string(w.beta_indices().size()));
  KostantPartition kp(d.coords.size());
  for (std::size_t j = 0; j < d.coords.size(); ++j) {
    if (d.coords[j] < 0) throw Error(ErrorCode::InvalidArgument, "Lusztig data are nonnegative");
    kp[w.beta_indices()[j]] = d.coords[j];
  }
  return kp;
}

LusztigDatum theta(const KostantBijection& bij, const LongWord& w, const Tableau& t) {
  return kostant_to_lusztig(w, bij.xi(t));
}

RootVector lusztig_weight(const RootSystem& rs, const LongWord& w, const LusztigDatum& d) {
  return pr(rs, lusztig_to_kostant(w, d));
}

}  // namespace binf
