#include "binf/report.hpp"

#include <json.hpp>

#include "binf/error.hpp"
#include "binf/io.hpp"
#include "binf/weyl.hpp"

namespace binf {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json poly_json(const IntPoly& p, const char* var) { return {{"coeffs", p.coeffs()}, {"text", p.to_string(var)}}; }

json rows_json(const std::vector<Row>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (Letter x : row) r.push_back(x.value);
    out.push_back(r);
  }
  return out;
}

std::string ints_string(const std::vector<int>& v, const char* open = "(", const char* close = ")") {
  std::string s = open;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + close;
}

const char* correction_name(Family f) {
  switch (f) {
    case Family::B: return "e_B";
    case Family::D: return "e_D";
    case Family::G: return "g2_corr";
    default: return nullptr;
  }
}

json partition_json(const RootSystem& rs, const KostantPartition& kp) {
  json m = json::object();
  for (std::size_t k = 0; k < kp.size(); ++k)
    if (kp[k]) m[rs.root(k).label.to_string()] = kp[k];
  return m;
}

std::string weight_text(const RootVector& wt) {
  if (wt.is_zero()) return wt.to_string() + " = 0";
  return wt.to_string() + " = -(" + root_expression(-wt) + ")";
}

void require_not_dot(Format fmt, const char* what) {
  if (fmt == Format::Dot) throw Error(ErrorCode::InvalidArgument, std::string("DOT output is only available for graphs, not ") + what);
}

}  // namespace

std::string one_minus_u_string(const IntPoly& p) {
  const IntPoly n = p.in_one_minus_basis();
  if (n.is_zero()) return "0";
  std::string s;
  for (int d = 0; d <= n.degree(); ++d) {
    IntPoly::Coeff c = n.coeff(d);
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    const IntPoly::Coeff a = c < 0 ? -c : c;
    if (d == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a);
    s += d == 1 ? "(1-u)" : "(1-u)^" + std::to_string(d);
  }
  return s;
}

std::string roots_report(const LieType& type, Format fmt) {
  require_not_dot(fmt, "roots");
  RootSystem rs(type);
  if (fmt == Format::Json) {
    json roots = json::array();
    for (const auto& r : rs.positive_roots())
      roots.push_back({{"label", r.label.to_string()}, {"vector", r.vector.coeffs()}, {"expr", root_expression(r.vector)}});
    return dump({{"type", type.name()},
                 {"rank", rs.rank()},
                 {"cartan", rs.cartan()},
                 {"num_positive_roots", rs.num_positive_roots()},
                 {"positive_roots", roots}});
  }
  std::string s = "type " + type.name() + ", " + std::to_string(rs.num_positive_roots()) + " positive roots\n";
  s += "cartan matrix:\n";
  for (const auto& row : rs.cartan()) s += "  " + ints_string(row, "[", "]") + "\n";
  for (const auto& r : rs.positive_roots())
    s += r.label.to_string() + " = " + root_expression(r.vector) + "  " + r.vector.to_string() + "\n";
  return s;
}

std::string graph_report(const KostantBijection& bij, int depth, Format fmt, unsigned threads) {
  const TInfinity& crystal = bij.crystal();
  const CrystalGraph g = crystal.graph(depth, TInfinity::kDefaultNodeLimit, threads);
  if (fmt == Format::Dot) {
    std::string s = "digraph T {\n  node [shape=box];\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
      s += "  n" + std::to_string(k) + " [label=\"" + reduced_label(crystal, g.nodes[k]) + "\"];\n";
    for (const auto& e : g.edges)
      s += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" + std::to_string(e.i) + "\"];\n";
    return s + "}\n";
  }
  if (fmt == Format::Json) {
    json nodes = json::array(), edges = json::array();
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
      nodes.push_back({{"id", k},
                       {"depth", g.depth[k]},
                       {"reduced", reduced_label(crystal, g.nodes[k])},
                       {"rows", rows_json(g.nodes[k].rows())},
                       {"weight", crystal.weight(g.nodes[k]).coeffs()},
                       {"seg", bij.seg(g.nodes[k])}});
    for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"i", e.i}, {"to", e.to}});
    return dump({{"type", crystal.type().name()}, {"depth", depth}, {"nodes", nodes}, {"edges", edges}});
  }
  std::string s = std::to_string(g.nodes.size()) + " nodes, " + std::to_string(g.edges.size()) + " edges\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    s += "n" + std::to_string(k) + " depth " + std::to_string(g.depth[k]) + "  " + reduced_label(crystal, g.nodes[k]) +
         "  wt " + crystal.weight(g.nodes[k]).to_string() + "  seg " + std::to_string(bij.seg(g.nodes[k])) + "\n";
  for (const auto& e : g.edges)
    s += "n" + std::to_string(e.from) + " -" + std::to_string(e.i) + "-> n" + std::to_string(e.to) + "\n";
  return s;
}

std::string tableau_report(const KostantBijection& bij, const Tableau& t, TableauQuery what, Format fmt) {
  require_not_dot(fmt, "tableaux");
  const TInfinity& crystal = bij.crystal();
  const RootSystem& rs = crystal.root_system();
  const bool all = what == TableauQuery::All;
  const char* corr = correction_name(rs.type().family());
  json j;
  std::string s;

  if (all) {
    j["type"] = rs.type().name();
    j["rows"] = rows_json(t.rows());
    j["reduced"] = reduced_label(crystal, t);
    s += format_rows(t.rows());
  }
  if (all || what == TableauQuery::Seg) {
    const SegStats st = bij.seg_stats(t);
    json seg = {{"seg_prime", st.seg_prime}, {"seg", st.seg}};
    if (corr) seg[corr] = st.correction;
    j["seg"] = seg;
    s += "seg'=" + std::to_string(st.seg_prime) + "\n";
    if (corr) s += std::string(corr) + "=" + std::to_string(st.correction) + "\n";
    s += "seg=" + std::to_string(st.seg) + "\n";
  }
  if (all || what == TableauQuery::Xi) {
    const KostantPartition kp = bij.xi(t);
    j["xi"] = partition_json(rs, kp);
    j["xi_text"] = format_partition(rs, kp);
    s += "xi = " + format_partition(rs, kp) + "\n";
  }
  if (all || what == TableauQuery::Weight) {
    const RootVector wt = crystal.weight(t);
    j["weight"] = wt.coeffs();
    s += "wt = " + weight_text(wt) + "\n";
  }
  if (all || what == TableauQuery::Content) {
    j["content"] = bij.content(t);
    s += "content=" + std::to_string(bij.content(t)) + "\n";
  }
  if (all || what == TableauQuery::EpsPhi) {
    std::vector<int> eps, phi;
    for (int i = 1; i <= rs.rank(); ++i) {
      eps.push_back(crystal.eps(t, i));
      phi.push_back(crystal.phi(t, i));
    }
    j["eps"] = eps;
    j["phi"] = phi;
    s += "eps = " + ints_string(eps, "[", "]") + "\nphi = " + ints_string(phi, "[", "]") + "\n";
  }
  return fmt == Format::Json ? dump(j) : s;
}

std::string theta_report(const KostantBijection& bij, const Tableau& t, const LongWord& word, Format fmt) {
  require_not_dot(fmt, "theta");
  const LusztigDatum d = theta(bij, word, t);
  if (fmt == Format::Json) return dump({{"word", d.word}, {"coords", d.coords}, {"nz", nz(d)}, {"seg", bij.seg(t)}});
  return ints_string(d.coords) + "\nnz=" + std::to_string(nz(d)) + "\n";
}

std::string beta_report(const RootSystem& rs, const LongWord& word, Format fmt) {
  require_not_dot(fmt, "beta");
  if (fmt == Format::Json) {
    json betas = json::array();
    for (std::size_t k : word.beta_indices())
      betas.push_back({{"label", rs.root(k).label.to_string()},
                       {"vector", rs.root(k).vector.coeffs()},
                       {"expr", root_expression(rs.root(k).vector)}});
    return dump({{"type", rs.type().name()}, {"word", word.word()}, {"betas", betas}});
  }
  std::string s;
  for (std::size_t j = 0; j < word.beta_indices().size(); ++j) {
    const auto& r = rs.root(word.beta_indices()[j]);
    s += "beta_" + std::to_string(j + 1) + " = " + root_expression(r.vector) + "  " + r.label.to_string() + "\n";
  }
  return s;
}

std::string gk_report(const GkReport& report, Format fmt) {
  require_not_dot(fmt, "verify-gk");
  if (fmt == Format::Json) {
    json terms = json::array();
    for (const auto& [mu, c] : report.lhs.terms())
      terms.push_back({{"mu", mu.coeffs()}, {"coeff", poly_json(c, "u")}, {"one_minus_u", c.in_one_minus_basis().coeffs()}});
    json bad = json::array();
    for (const auto& d : report.discrepancies)
      bad.push_back({{"mu", d.mu.coeffs()},
                     {"lhs", poly_json(d.lhs, "u")},
                     {"tableau_bfs", poly_json(d.tableau_bfs, "u")},
                     {"tableau_upsilon", poly_json(d.tableau_upsilon, "u")},
                     {"lusztig", poly_json(d.lusztig, "u")}});
    return dump({{"type", report.type.name()},
                 {"height", report.bound},
                 {"word", report.word},
                 {"ok", report.ok()},
                 {"monomials", report.lhs.terms().size()},
                 {"tableaux", report.tableau_count},
                 {"terms", terms},
                 {"discrepancies", bad}});
  }
  std::string s = "GK " + report.type.name() + " height<=" + std::to_string(report.bound) + " word " +
                  ints_string(report.word) + ": " + (report.ok() ? "OK" : "MISMATCH") + " (" +
                  std::to_string(report.lhs.terms().size()) + " monomials, " + std::to_string(report.tableau_count) +
                  " tableaux)\n";
  for (const auto& [mu, c] : report.lhs.terms())
    s += mu.to_string() + "  " + c.to_string("u") + "  =  " + one_minus_u_string(c) + "\n";
  for (const auto& d : report.discrepancies)
    s += "mismatch at " + d.mu.to_string() + ": lhs " + d.lhs.to_string("u") + ", tableaux(bfs) " +
         d.tableau_bfs.to_string("u") + ", tableaux(upsilon) " + d.tableau_upsilon.to_string("u") + ", lusztig " +
         d.lusztig.to_string("u") + "\n";
  return s;
}

std::string qkostant_report(const SymFunc& sf, const RootVector& mu, Format fmt) {
  require_not_dot(fmt, "qkostant");
  const IntPoly brute = sf.q_kostant(mu, QKostantMode::Bruteforce);
  const IntPoly tab = sf.q_kostant(mu, QKostantMode::Tableau);
  if (fmt == Format::Json)
    return dump({{"type", sf.root_system().type().name()},
                 {"mu", mu.coeffs()},
                 {"poly", poly_json(brute, "q")},
                 {"tableau_mode", poly_json(tab, "q")},
                 {"modes_agree", brute == tab}});
  return "P(" + root_expression(mu) + "; q) = " + brute.to_string("q") + "\n" +
         (brute == tab ? "tableau and brute-force modes agree\n" : "tableau mode differs: " + tab.to_string("q") + "\n");
}

std::string qkostant_report(const SymFunc& sf, const WeightVector& mu, Format fmt) {
  if (auto r = sf.root_system().to_root(mu)) return qkostant_report(sf, *r, fmt);
  require_not_dot(fmt, "qkostant");
  if (fmt == Format::Json)
    return dump({{"type", sf.root_system().type().name()},
                 {"mu_weight", mu.coeffs()},
                 {"poly", poly_json(IntPoly(), "q")},
                 {"in_root_lattice", false}});
  return "P(" + mu.to_string() + "; q) = 0 (not in the root lattice)\n";
}

std::string kostka_report(const SymFunc& sf, const WeightVector& lambda, const WeightVector& mu, Format fmt) {
  require_not_dot(fmt, "kostka");
  const IntPoly k = sf.kostka_foulkes(lambda, mu);
  const long long mult = sf.multiplicity(lambda, mu);
  if (fmt == Format::Json)
    return dump({{"type", sf.root_system().type().name()},
                 {"lambda", lambda.coeffs()},
                 {"mu", mu.coeffs()},
                 {"poly", poly_json(k, "q")},
                 {"at_one", k.eval(1)},
                 {"multiplicity", mult}});
  return "K(" + lambda.to_string() + "," + mu.to_string() + "; q) = " + k.to_string("q") + "\nK(1) = " +
         std::to_string(k.eval(1)) + ", weight multiplicity = " + std::to_string(mult) + "\n";
}

std::string hall_littlewood_report(const SymFunc& sf, const WeightVector& mu, Format fmt) {
  require_not_dot(fmt, "hall-littlewood");
  const WeightLaurentPoly p = sf.hall_littlewood(mu);
  if (fmt == Format::Json) {
    json terms = json::array();
    for (const auto& [w, c] : p) terms.push_back({{"weight", w.coeffs()}, {"coeff", poly_json(c, "q")}});
    return dump({{"type", sf.root_system().type().name()}, {"mu", mu.coeffs()}, {"terms", terms}});
  }
  std::string s = "P_" + mu.to_string() + "(z; q), " + std::to_string(p.size()) + " terms\n";
  for (const auto& [w, c] : p) s += "z^" + w.to_string() + "  " + c.to_string("q") + "\n";
  return s;
}

}  // namespace binf
