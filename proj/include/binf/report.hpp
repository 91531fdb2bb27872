#pragma once

#include <string>

#include "binf/kostant.hpp"
#include "binf/lusztig.hpp"
#include "binf/series.hpp"
#include "binf/symfunc.hpp"

namespace binf {

enum class Format { Text, Json, Dot };

enum class TableauQuery { Seg, Xi, Weight, Content, EpsPhi, All };

/// p written in powers of (1 - u), e.g. "2(1-u) + (1-u)^2".
std::string one_minus_u_string(const IntPoly& p);

std::string roots_report(const LieType& type, Format fmt);
/// Text, JSON or DOT rendering of the f_i-graph to `depth`.
std::string graph_report(const KostantBijection& bij, int depth, Format fmt, unsigned threads = 1);
std::string tableau_report(const KostantBijection& bij, const Tableau& t, TableauQuery what, Format fmt);
std::string theta_report(const KostantBijection& bij, const Tableau& t, const LongWord& word, Format fmt);
std::string beta_report(const RootSystem& rs, const LongWord& word, Format fmt);
std::string gk_report(const GkReport& report, Format fmt);
std::string qkostant_report(const SymFunc& sf, const RootVector& mu, Format fmt);
/// mu in weight coordinates; P(mu; q) = 0 off the root lattice.
std::string qkostant_report(const SymFunc& sf, const WeightVector& mu, Format fmt);
std::string kostka_report(const SymFunc& sf, const WeightVector& lambda, const WeightVector& mu, Format fmt);
std::string hall_littlewood_report(const SymFunc& sf, const WeightVector& mu, Format fmt);

}  // namespace binf
