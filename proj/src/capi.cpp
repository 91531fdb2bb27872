#include "binf/binf.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "binf/error.hpp"
#include "binf/io.hpp"
#include "binf/kostant.hpp"
#include "binf/lusztig.hpp"
#include "binf/report.hpp"
#include "binf/series.hpp"
#include "binf/symfunc.hpp"

struct binf_crystal {
  std::shared_ptr<const binf::KostantBijection> bij;
  unsigned threads = 1;
};

struct binf_tableau {
  std::shared_ptr<const binf::KostantBijection> bij;
  binf::Tableau t;
};

namespace {

thread_local std::string last_error;

binf_status fail(binf_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

binf_status map_code(binf::ErrorCode c) {
  switch (c) {
    case binf::ErrorCode::InvalidArgument: return BINF_INVALID_ARGUMENT;
    case binf::ErrorCode::UnsupportedType: return BINF_UNSUPPORTED_TYPE;
    case binf::ErrorCode::InvalidTableau: return BINF_INVALID_TABLEAU;
    case binf::ErrorCode::InvalidWord: return BINF_INVALID_WORD;
    case binf::ErrorCode::LimitExceeded: return BINF_LIMIT_EXCEEDED;
  }
  return BINF_INTERNAL;
}

template <class F>
binf_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return BINF_OK;
  } catch (const binf::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BINF_LIMIT_EXCEEDED, "out of memory");
  } catch (const std::exception& e) {
    return fail(BINF_INTERNAL, e.what());
  }
}

void require(const void* p, const char* name) {
  if (!p) throw binf::Error(binf::ErrorCode::InvalidArgument, std::string(name) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

binf::Format to_format(binf_format f) {
  switch (f) {
    case BINF_FORMAT_TEXT: return binf::Format::Text;
    case BINF_FORMAT_JSON: return binf::Format::Json;
    case BINF_FORMAT_DOT: return binf::Format::Dot;
  }
  throw binf::Error(binf::ErrorCode::InvalidArgument, "unknown output format");
}

binf::LieType parse_type(const char* type) {
  require(type, "type");
  return binf::LieType::parse(type);
}

std::vector<int> to_vector(const int* p, std::size_t len, const char* name) {
  if (len) require(p, name);
  return std::vector<int>(p, p + len);
}

void check_len(std::size_t len, std::size_t want, const char* name) {
  if (len != want)
    throw binf::Error(binf::ErrorCode::InvalidArgument, std::string(name) + " has length " + std::to_string(len) +
                                                            ", expected " + std::to_string(want));
}

binf_tableau* wrap(const std::shared_ptr<const binf::KostantBijection>& bij, binf::Tableau t) {
  return new binf_tableau{bij, std::move(t)};
}

}  // namespace

extern "C" {

const char* binf_last_error(void) { return last_error.c_str(); }

const char* binf_status_string(binf_status status) {
  switch (status) {
    case BINF_OK: return "ok";
    case BINF_INVALID_ARGUMENT: return "invalid argument";
    case BINF_UNSUPPORTED_TYPE: return "unsupported type";
    case BINF_INVALID_TABLEAU: return "invalid tableau";
    case BINF_INVALID_WORD: return "invalid long word";
    case BINF_LIMIT_EXCEEDED: return "limit exceeded";
    case BINF_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void binf_string_free(char* s) { std::free(s); }

binf_status binf_crystal_create(const char* type, binf_crystal** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto bij = std::make_shared<const binf::KostantBijection>(parse_type(type));
    *out = new binf_crystal{std::move(bij), 1};
  });
}

void binf_crystal_destroy(binf_crystal* crystal) { delete crystal; }

binf_status binf_crystal_set_threads(binf_crystal* crystal, unsigned threads) {
  return guarded([&] {
    require(crystal, "crystal");
    crystal->threads = threads ? threads : 1;
  });
}

binf_status binf_crystal_rank(const binf_crystal* crystal, int* out) {
  return guarded([&] {
    require(crystal, "crystal");
    require(out, "out");
    *out = crystal->bij->root_system().rank();
  });
}

binf_status binf_crystal_num_rows(const binf_crystal* crystal, int* out) {
  return guarded([&] {
    require(crystal, "crystal");
    require(out, "out");
    *out = crystal->bij->crystal().num_rows();
  });
}

binf_status binf_tableau_parse(const binf_crystal* crystal, const char* text, int reduced, binf_tableau** out) {
  return guarded([&] {
    require(crystal, "crystal");
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    auto rows = binf::parse_rows(text);
    const auto& c = crystal->bij->crystal();
    *out = wrap(crystal->bij, reduced ? c.from_reduced(rows) : c.validate(std::move(rows)));
  });
}

binf_status binf_tableau_highest(const binf_crystal* crystal, binf_tableau** out) {
  return guarded([&] {
    require(crystal, "crystal");
    require(out, "out");
    *out = wrap(crystal->bij, crystal->bij->crystal().highest());
  });
}

binf_status binf_tableau_clone(const binf_tableau* t, binf_tableau** out) {
  return guarded([&] {
    require(t, "tableau");
    require(out, "out");
    *out = wrap(t->bij, t->t);
  });
}

void binf_tableau_destroy(binf_tableau* t) { delete t; }

int binf_tableau_equal(const binf_tableau* a, const binf_tableau* b) { return a && b && a->t == b->t; }

binf_status binf_tableau_f(const binf_tableau* t, int i, binf_tableau** out) {
  return guarded([&] {
    require(t, "tableau");
    require(out, "out");
    *out = nullptr;
    t->bij->root_system().check_index(i);
    *out = wrap(t->bij, t->bij->crystal().f(t->t, i));
  });
}

binf_status binf_tableau_e(const binf_tableau* t, int i, binf_tableau** out) {
  return guarded([&] {
    require(t, "tableau");
    require(out, "out");
    *out = nullptr;
    t->bij->root_system().check_index(i);
    if (auto r = t->bij->crystal().e(t->t, i)) *out = wrap(t->bij, std::move(*r));
  });
}

binf_status binf_tableau_rows(const binf_tableau* t, char** out) {
  return guarded([&] {
    require(t, "tableau");
    require(out, "out");
    *out = copy_string(binf::format_rows(t->t.rows()));
  });
}

binf_status binf_tableau_reduced(const binf_tableau* t, char** out) {
  return guarded([&] {
    require(t, "tableau");
    require(out, "out");
    *out = copy_string(binf::reduced_label(t->bij->crystal(), t->t));
  });
}

binf_status binf_tableau_seg(const binf_tableau* t, int* seg_prime, int* correction, int* seg) {
  return guarded([&] {
    require(t, "tableau");
    const auto s = t->bij->seg_stats(t->t);
    if (seg_prime) *seg_prime = s.seg_prime;
    if (correction) *correction = s.correction;
    if (seg) *seg = s.seg;
  });
}

binf_status binf_tableau_content(const binf_tableau* t, int* out) {
  return guarded([&] {
    require(t, "tableau");
    require(out, "out");
    *out = t->bij->content(t->t);
  });
}

binf_status binf_tableau_weight(const binf_tableau* t, int* coords, size_t len) {
  return guarded([&] {
    require(t, "tableau");
    require(coords, "coords");
    const auto wt = t->bij->crystal().weight(t->t);
    check_len(len, wt.rank(), "coords");
    for (std::size_t k = 0; k < len; ++k) coords[k] = wt[k];
  });
}

binf_status binf_tableau_eps_phi(const binf_tableau* t, int* eps, int* phi, size_t len) {
  return guarded([&] {
    require(t, "tableau");
    const auto& c = t->bij->crystal();
    check_len(len, c.root_system().dim(), "eps/phi");
    for (int i = 1; i <= c.root_system().rank(); ++i) {
      if (eps) eps[i - 1] = c.eps(t->t, i);
      if (phi) phi[i - 1] = c.phi(t->t, i);
    }
  });
}

binf_status binf_tableau_xi(const binf_tableau* t, int* mults, size_t len) {
  return guarded([&] {
    require(t, "tableau");
    require(mults, "mults");
    const auto kp = t->bij->xi(t->t);
    check_len(len, kp.size(), "mults");
    for (std::size_t k = 0; k < len; ++k) mults[k] = kp[k];
  });
}

binf_status binf_tableau_theta(const binf_tableau* t, const int* word, size_t word_len, int* coords, size_t len) {
  return guarded([&] {
    require(t, "tableau");
    require(coords, "coords");
    binf::LongWord w(t->bij->root_system(), to_vector(word, word_len, "word"));
    const auto d = binf::theta(*t->bij, w, t->t);
    check_len(len, d.coords.size(), "coords");
    for (std::size_t k = 0; k < len; ++k) coords[k] = d.coords[k];
  });
}

binf_status binf_report_roots(const char* type, binf_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(binf::roots_report(parse_type(type), to_format(format)));
  });
}

binf_status binf_report_graph(const binf_crystal* crystal, int depth, binf_format format, char** out) {
  return guarded([&] {
    require(crystal, "crystal");
    require(out, "out");
    *out = copy_string(binf::graph_report(*crystal->bij, depth, to_format(format), crystal->threads));
  });
}

binf_status binf_report_tableau(const binf_tableau* t, binf_tableau_query what, binf_format format, char** out) {
  return guarded([&] {
    require(t, "tableau");
    require(out, "out");
    binf::TableauQuery q;
    switch (what) {
      case BINF_QUERY_SEG: q = binf::TableauQuery::Seg; break;
      case BINF_QUERY_XI: q = binf::TableauQuery::Xi; break;
      case BINF_QUERY_WEIGHT: q = binf::TableauQuery::Weight; break;
      case BINF_QUERY_CONTENT: q = binf::TableauQuery::Content; break;
      case BINF_QUERY_EPS_PHI: q = binf::TableauQuery::EpsPhi; break;
      case BINF_QUERY_ALL: q = binf::TableauQuery::All; break;
      default: throw binf::Error(binf::ErrorCode::InvalidArgument, "unknown tableau query");
    }
    *out = copy_string(binf::tableau_report(*t->bij, t->t, q, to_format(format)));
  });
}

binf_status binf_report_theta(const binf_tableau* t, const int* word, size_t len, binf_format format, char** out) {
  return guarded([&] {
    require(t, "tableau");
    require(out, "out");
    binf::LongWord w(t->bij->root_system(), to_vector(word, len, "word"));
    *out = copy_string(binf::theta_report(*t->bij, t->t, w, to_format(format)));
  });
}

binf_status binf_report_beta(const char* type, const int* word, size_t len, binf_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    binf::RootSystem rs(parse_type(type));
    binf::LongWord w(rs, to_vector(word, len, "word"));
    *out = copy_string(binf::beta_report(rs, w, to_format(format)));
  });
}

binf_status binf_verify_gk(const char* type, int height, const int* word, size_t len, unsigned threads,
                           binf_format format, int* ok, char** out) {
  return guarded([&] {
    require(out, "out");
    std::optional<std::vector<int>> w;
    if (word && len) w = to_vector(word, len, "word");
    const auto report = binf::verify_gk(parse_type(type), height, w, threads ? threads : 1);
    if (ok) *ok = report.ok() ? 1 : 0;
    *out = copy_string(binf::gk_report(report, to_format(format)));
  });
}

binf_status binf_report_qkostant(const char* type, const int* mu, size_t len, int mu_is_weight, binf_format format,
                                 char** out) {
  return guarded([&] {
    require(out, "out");
    binf::SymFunc sf(parse_type(type));
    check_len(len, sf.root_system().dim(), "mu");
    std::vector<int> v = to_vector(mu, len, "mu");
    *out = copy_string(mu_is_weight ? binf::qkostant_report(sf, binf::WeightVector(v), to_format(format))
                                    : binf::qkostant_report(sf, binf::RootVector(v), to_format(format)));
  });
}

binf_status binf_report_kostka(const char* type, const int* lambda, const int* mu, size_t len, binf_format format,
                               char** out) {
  return guarded([&] {
    require(out, "out");
    binf::SymFunc sf(parse_type(type));
    check_len(len, sf.root_system().dim(), "lambda/mu");
    *out = copy_string(binf::kostka_report(sf, binf::WeightVector(to_vector(lambda, len, "lambda")),
                                           binf::WeightVector(to_vector(mu, len, "mu")), to_format(format)));
  });
}

binf_status binf_report_hall_littlewood(const char* type, const int* mu, size_t len, binf_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    binf::SymFunc sf(parse_type(type));
    check_len(len, sf.root_system().dim(), "mu");
    *out = copy_string(binf::hall_littlewood_report(sf, binf::WeightVector(to_vector(mu, len, "mu")), to_format(format)));
  });
}

}  // extern "C"
