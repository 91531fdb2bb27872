#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "binf/binf.h"

namespace {

struct DomainError {
  std::string message;
};

void check(binf_status s) {
  if (s != BINF_OK) throw DomainError{std::string(binf_status_string(s)) + ": " + binf_last_error()};
}

class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { binf_string_free(p_); }
  char** out() { return &p_; }
  const char* get() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

struct Crystal {
  binf_crystal* h = nullptr;
  explicit Crystal(const std::string& type) { check(binf_crystal_create(type.c_str(), &h)); }
  Crystal(const Crystal&) = delete;
  Crystal& operator=(const Crystal&) = delete;
  ~Crystal() { binf_crystal_destroy(h); }
};

struct TableauHandle {
  binf_tableau* h = nullptr;
  TableauHandle() = default;
  TableauHandle(const TableauHandle&) = delete;
  TableauHandle& operator=(const TableauHandle&) = delete;
  ~TableauHandle() { binf_tableau_destroy(h); }
};

std::vector<int> parse_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" []");
    auto last = item.find_last_not_of(" []");
    if (first == std::string::npos) continue;
    item = item.substr(first, last - first + 1);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "expected comma-separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(what, "empty list");
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw DomainError{"cannot read tableau file '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TableauInput {
  std::string file;
  std::string rows;
  bool reduced = false;

  void add_to(CLI::App* cmd) {
    auto* f = cmd->add_option("--tableau", file, "tableau file, one row per line ('-' for stdin)");
    auto* r = cmd->add_option("--rows", rows, "tableau rows inline, separated by '/' or ';'");
    f->excludes(r);
    cmd->add_flag("--reduced", reduced, "input omits the forced prefix of each row ('*' = empty row)");
  }

  void load(const Crystal& c, TableauHandle& t) const {
    if (file.empty() && rows.empty()) throw CLI::RequiredError("--tableau or --rows");
    const std::string text = rows.empty() ? read_input(file) : rows;
    check(binf_tableau_parse(c.h, text.c_str(), reduced ? 1 : 0, &t.h));
  }
};

binf_format format_of(bool json, bool dot) { return dot ? BINF_FORMAT_DOT : json ? BINF_FORMAT_JSON : BINF_FORMAT_TEXT; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marginally large tableaux, Kostant partitions and the Gindikin-Karpelevich identity"};
  app.require_subcommand(1);

  std::string type;
  bool json = false;
  bool dot = false;
  unsigned threads = 1;
  int depth = 0;
  std::string word_text, mu_text, lambda_text;
  bool mu_is_weight = false;
  TableauInput input;
  std::function<void()> action;

  auto add_type = [&](CLI::App* cmd) { cmd->add_option("type", type, "Lie type, e.g. A3, B3, D4, G2")->required(); };
  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "machine-readable output"); };

  auto* roots = app.add_subcommand("roots", "Cartan matrix and positive roots");
  add_type(roots);
  add_json(roots);
  roots->callback([&] {
    action = [&] {
      Text out;
      check(binf_report_roots(type.c_str(), format_of(json, false), out.out()));
      std::cout << out.get();
    };
  });

  auto* beta = app.add_subcommand("beta", "beta-sequence of a long word");
  add_type(beta);
  beta->add_option("--word", word_text, "long word, e.g. 3,2,3,2,1,2,3,2,1")->required();
  add_json(beta);
  beta->callback([&] {
    action = [&] {
      auto w = parse_list(word_text, "--word");
      Text out;
      check(binf_report_beta(type.c_str(), w.data(), w.size(), format_of(json, false), out.out()));
      std::cout << out.get();
    };
  });

  auto* graph = app.add_subcommand("graph", "the f_i-graph of T(infinity) down to a depth");
  add_type(graph);
  graph->add_option("--depth", depth, "number of f_i steps from the highest weight element")->required()->check(
      CLI::NonNegativeNumber);
  auto* gj = graph->add_flag("--json", json, "JSON output");
  graph->add_flag("--dot", dot, "Graphviz output with reduced-form node labels")->excludes(gj);
  graph->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  graph->callback([&] {
    action = [&] {
      Crystal c(type);
      check(binf_crystal_set_threads(c.h, threads));
      Text out;
      check(binf_report_graph(c.h, depth, format_of(json, dot), out.out()));
      std::cout << out.get();
    };
  });

  struct Query {
    const char* name;
    const char* help;
    binf_tableau_query q;
  };
  const Query queries[] = {{"seg", "segment statistics seg', correction and seg", BINF_QUERY_SEG},
                           {"xi", "the Kostant partition Xi(T)", BINF_QUERY_XI},
                           {"wt", "the weight of T", BINF_QUERY_WEIGHT},
                           {"content", "the content |T|", BINF_QUERY_CONTENT},
                           {"eps-phi", "the vectors eps_i(T) and phi_i(T)", BINF_QUERY_EPS_PHI},
                           {"show", "all tableau statistics", BINF_QUERY_ALL}};
  binf_tableau_query query = BINF_QUERY_ALL;
  for (const auto& q : queries) {
    auto* cmd = app.add_subcommand(q.name, q.help);
    add_type(cmd);
    input.add_to(cmd);
    add_json(cmd);
    const binf_tableau_query which = q.q;
    cmd->callback([&, which] {
      query = which;
      action = [&] {
        Crystal c(type);
        TableauHandle t;
        input.load(c, t);
        Text out;
        check(binf_report_tableau(t.h, query, format_of(json, false), out.out()));
        std::cout << out.get();
      };
    });
  }

  auto* theta = app.add_subcommand("theta", "Lusztig datum of T for a long word");
  add_type(theta);
  theta->add_option("--word", word_text, "long word")->required();
  input.add_to(theta);
  add_json(theta);
  theta->callback([&] {
    action = [&] {
      auto w = parse_list(word_text, "--word");
      Crystal c(type);
      TableauHandle t;
      input.load(c, t);
      Text out;
      check(binf_report_theta(t.h, w.data(), w.size(), format_of(json, false), out.out()));
      std::cout << out.get();
    };
  });

  auto* gk = app.add_subcommand("verify-gk", "check the Gindikin-Karpelevich identity up to a height");
  add_type(gk);
  gk->add_option("--height", depth, "height bound of the truncation")->required()->check(CLI::NonNegativeNumber);
  gk->add_option("--word", word_text, "long word for the Lusztig-data side (default: smallest)");
  gk->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  add_json(gk);
  int gk_ok = 1;
  gk->callback([&] {
    action = [&] {
      std::vector<int> w;
      if (!word_text.empty()) w = parse_list(word_text, "--word");
      Text out;
      check(binf_verify_gk(type.c_str(), depth, w.empty() ? nullptr : w.data(), w.size(), threads,
                           format_of(json, false), &gk_ok, out.out()));
      std::cout << out.get();
    };
  });

  auto* qk = app.add_subcommand("qkostant", "q-analogue of Kostant's partition function");
  add_type(qk);
  qk->add_option("--mu", mu_text, "mu in simple-root coordinates, e.g. 1,1")->required();
  qk->add_flag("--weight", mu_is_weight, "read --mu in fundamental-weight coordinates");
  add_json(qk);
  qk->callback([&] {
    action = [&] {
      auto mu = parse_list(mu_text, "--mu");
      Text out;
      check(binf_report_qkostant(type.c_str(), mu.data(), mu.size(), mu_is_weight ? 1 : 0, format_of(json, false),
                                 out.out()));
      std::cout << out.get();
    };
  });

  auto* kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomial K_{lambda,mu}(q)");
  add_type(kostka);
  kostka->add_option("--lambda", lambda_text, "dominant lambda in fundamental-weight coordinates")->required();
  kostka->add_option("--mu", mu_text, "dominant mu in fundamental-weight coordinates")->required();
  add_json(kostka);
  kostka->callback([&] {
    action = [&] {
      auto lambda = parse_list(lambda_text, "--lambda");
      auto mu = parse_list(mu_text, "--mu");
      if (lambda.size() != mu.size()) throw CLI::ValidationError("--mu", "lambda and mu must have the same length");
      Text out;
      check(binf_report_kostka(type.c_str(), lambda.data(), mu.data(), mu.size(), format_of(json, false), out.out()));
      std::cout << out.get();
    };
  });

  auto* hl = app.add_subcommand("hall-littlewood", "Hall-Littlewood function P_mu(z; q)");
  add_type(hl);
  hl->add_option("--mu", mu_text, "dominant mu in fundamental-weight coordinates")->required();
  add_json(hl);
  hl->callback([&] {
    action = [&] {
      auto mu = parse_list(mu_text, "--mu");
      Text out;
      check(binf_report_hall_littlewood(type.c_str(), mu.data(), mu.size(), format_of(json, false), out.out()));
      std::cout << out.get();
    };
  });

  try {
    app.parse(argc, argv);
    action();
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  }
  return gk_ok ? 0 : 1;
}
