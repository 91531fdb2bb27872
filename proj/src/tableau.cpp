#include "binf/tableau.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "binf/error.hpp"

namespace binf {

namespace {

int count_letter(const Row& row, Letter x) {
  return static_cast<int>(std::count(row.begin(), row.end(), x));
}

int forced_requirement(const std::vector<Row>& rows, std::size_t k) {
  return k + 1 < rows.size() ? static_cast<int>(rows[k + 1].size()) + 1 : 1;
}

std::string letter_name(Letter x) {
  if (x.value < 0) return std::to_string(-x.value) + "-bar";
  return std::to_string(x.value);
}

}  // namespace

std::size_t Tableau::box_count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

std::size_t Tableau::Hash::operator()(const Tableau& t) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& row : t.rows_) {
    for (Letter x : row) h = (h ^ static_cast<std::size_t>(x.value + 64)) * 1099511628211ULL;
    h = (h ^ 0xffu) * 1099511628211ULL;
  }
  return h;
}

TInfinity::TInfinity(LieType type) : letters_(RootSystem(type)) {
  switch (type.family()) {
    case Family::D: num_rows_ = type.rank() - 1; break;
    case Family::G: num_rows_ = 2; break;
    default: num_rows_ = type.rank(); break;
  }
}

Tableau TInfinity::highest() const {
  std::vector<Row> rows(static_cast<std::size_t>(num_rows_));
  for (int j = 1; j <= num_rows_; ++j)
    rows[static_cast<std::size_t>(j - 1)] = Row(static_cast<std::size_t>(num_rows_ - j + 1), Letter{j});
  return Tableau(type(), std::move(rows));
}

bool TInfinity::allowed_in_row(int row, Letter x) const {
  if (!letters_.contains(x)) return false;
  const std::size_t p = letters_.position(x);
  switch (type().family()) {
    case Family::A: return x.value >= row;
    case Family::G:
      if (row == 1) return true;
      return x.value == 2 || x.value == 3;
    default:
      // j <= x <= j-bar
      return p >= letters_.position(Letter{row}) && p <= letters_.position(Letter{-row});
  }
}

std::vector<TableauViolation> TInfinity::violations(const std::vector<Row>& rows) const {
  std::vector<TableauViolation> out;
  auto add = [&](int row, int col, std::string msg) { out.push_back({row, col, std::move(msg)}); };

  if (static_cast<int>(rows.size()) != num_rows_) {
    add(0, 0, type().name() + " tableaux have exactly " + std::to_string(num_rows_) + " rows, got " +
                  std::to_string(rows.size()));
    return out;
  }

  bool letters_ok = true;
  for (int j = 1; j <= num_rows_; ++j) {
    const Row& row = rows[static_cast<std::size_t>(j - 1)];
    if (row.empty()) {
      add(j, 1, "row is empty; the first column must read 1.." + std::to_string(num_rows_));
      letters_ok = false;
      continue;
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!letters_.contains(row[c])) {
        add(j, static_cast<int>(c + 1), "letter " + row[c].to_string() + " is not in the alphabet of " + type().name());
        letters_ok = false;
      } else if (!allowed_in_row(j, row[c])) {
        add(j, static_cast<int>(c + 1), "letter " + letter_name(row[c]) + " is not allowed in row " + std::to_string(j));
      }
    }
    if (row[0] != Letter{j}) add(j, 1, "first column must have entry " + std::to_string(j));
  }
  if (!letters_ok) return out;

  for (int j = 1; j <= num_rows_; ++j) {
    const Row& row = rows[static_cast<std::size_t>(j - 1)];
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (!letters_.comparable(row[c - 1], row[c])) {
        add(j, static_cast<int>(c + 1), "entries " + std::to_string(type().rank()) + " and " +
                                            std::to_string(type().rank()) + "-bar appear in the same row");
      } else if (letters_.precedes(row[c], row[c - 1])) {
        add(j, static_cast<int>(c + 1), "row is not weakly increasing");
      }
    }
    if (j < num_rows_) {
      const Row& below = rows[static_cast<std::size_t>(j)];
      if (below.size() > row.size()) add(j + 1, static_cast<int>(row.size() + 1), "row is longer than the row above");
      for (std::size_t c = 0; c < std::min(below.size(), row.size()); ++c)
        if (!letters_.precedes(row[c], below[c]))
          add(j + 1, static_cast<int>(c + 1), "column is not strictly increasing");
    }
    const int required = forced_requirement(rows, static_cast<std::size_t>(j - 1));
    const int have = count_letter(row, Letter{j});
    if (have != required)
      add(j, 0, "row has " + std::to_string(have) + " boxes of " + std::to_string(j) + " but marginal largeness requires " +
                    std::to_string(required));
    const auto fam = type().family();
    if ((fam == Family::B || fam == Family::G) && count_letter(row, Letter{0}) > 1)
      add(j, 0, "a 0-box occurs more than once in the row");
  }
  return out;
}

Tableau TInfinity::validate(std::vector<Row> rows) const {
  auto bad = violations(rows);
  if (!bad.empty()) {
    std::string msg = "invalid " + type().name() + " tableau:";
    for (const auto& v : bad) {
      msg += "\n  ";
      if (v.row) msg += "row " + std::to_string(v.row);
      if (v.column) msg += ", column " + std::to_string(v.column);
      if (v.row) msg += ": ";
      msg += v.message;
    }
    throw Error(ErrorCode::InvalidTableau, msg);
  }
  return Tableau(type(), std::move(rows));
}

void TInfinity::check(const Tableau& t) const {
  if (t.type() != type())
    throw Error(ErrorCode::InvalidArgument, "tableau of type " + t.type().name() + " used with " + type().name());
}

std::vector<Row> TInfinity::reduced_form(const Tableau& t) const {
  check(t);
  std::vector<Row> out;
  for (int j = 1; j <= t.num_rows(); ++j) {
    const Row& row = t.row(j);
    auto it = std::find_if(row.begin(), row.end(), [j](Letter x) { return x.value != j; });
    out.emplace_back(it, row.end());
  }
  return out;
}

Tableau TInfinity::from_reduced(const std::vector<Row>& reduced) const {
  if (static_cast<int>(reduced.size()) != num_rows_)
    throw Error(ErrorCode::InvalidTableau, type().name() + " tableaux have exactly " + std::to_string(num_rows_) +
                                               " rows, got " + std::to_string(reduced.size()));
  std::vector<Row> rows(reduced.size());
  std::size_t below = 0;
  for (std::size_t k = reduced.size(); k-- > 0;) {
    Row row(below + 1, Letter{static_cast<int>(k + 1)});
    row.insert(row.end(), reduced[k].begin(), reduced[k].end());
    below = row.size();
    rows[k] = std::move(row);
  }
  return validate(std::move(rows));
}

std::vector<std::pair<int, std::size_t>> TInfinity::reading_cells(const std::vector<Row>& rows) const {
  std::vector<std::pair<int, std::size_t>> cells;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = width; c-- > 0;)
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (c < rows[j].size()) cells.emplace_back(static_cast<int>(j), c);
  return cells;
}

std::vector<Letter> TInfinity::reading(const Tableau& t) const {
  check(t);
  std::vector<Letter> word;
  word.reserve(t.box_count());
  for (auto [j, c] : reading_cells(t.rows())) word.push_back(t.rows()[static_cast<std::size_t>(j)][c]);
  return word;
}

void TInfinity::normalize(std::vector<Row>& rows) const {
  for (std::size_t k = rows.size(); k-- > 0;) {
    const Letter own{static_cast<int>(k + 1)};
    const int required = forced_requirement(rows, k);
    const int have = count_letter(rows[k], own);
    if (have == required) continue;
    if (have == required - 1) {
      for (std::size_t j = 0; j <= k; ++j) rows[j].insert(rows[j].begin(), Letter{static_cast<int>(j + 1)});
    } else if (have == required + 1) {
      for (std::size_t j = 0; j <= k; ++j) rows[j].erase(rows[j].begin());
    } else {
      throw Error(ErrorCode::InvalidTableau, "crystal operator left row " + std::to_string(k + 1) + " unbalanced");
    }
  }
}

Tableau TInfinity::f(const Tableau& t, int i) const {
  check(t);
  const auto cells = reading_cells(t.rows());
  std::vector<Letter> word;
  word.reserve(cells.size());
  for (auto [j, c] : cells) word.push_back(t.rows()[static_cast<std::size_t>(j)][c]);
  auto pos = letters_.f_position(i, word);
  if (!pos) throw Error(ErrorCode::InvalidTableau, "f_" + std::to_string(i) + " found no unmatched + sign");
  std::vector<Row> rows = t.rows();
  auto [j, c] = cells[*pos];
  Letter& box = rows[static_cast<std::size_t>(j)][c];
  box = *letters_.f(i, box);
  normalize(rows);
  return Tableau(type(), std::move(rows));
}

std::optional<Tableau> TInfinity::e(const Tableau& t, int i) const {
  check(t);
  const auto cells = reading_cells(t.rows());
  std::vector<Letter> word;
  word.reserve(cells.size());
  for (auto [j, c] : cells) word.push_back(t.rows()[static_cast<std::size_t>(j)][c]);
  auto pos = letters_.e_position(i, word);
  if (!pos) return std::nullopt;
  std::vector<Row> rows = t.rows();
  auto [j, c] = cells[*pos];
  Letter& box = rows[static_cast<std::size_t>(j)][c];
  box = *letters_.e(i, box);
  normalize(rows);
  return Tableau(type(), std::move(rows));
}

int TInfinity::eps(const Tableau& t, int i) const { return letters_.word_eps(i, reading(t)); }

int TInfinity::phi(const Tableau& t, int i) const {
  return eps(t, i) + root_system().pairing(i, weight(t));
}

RootVector TInfinity::weight(const Tableau& t) const {
  check(t);
  RootVector w = root_system().zero_root();
  for (int j = 1; j <= t.num_rows(); ++j) {
    const RootVector& base = letters_.depth(Letter{j});
    for (Letter x : t.row(j)) w -= letters_.depth(x) - base;
  }
  return w;
}

CrystalGraph TInfinity::graph(int depth, std::size_t node_limit, unsigned threads) const {
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "depth must be nonnegative");
  threads = std::max(1u, threads);
  CrystalGraph g;
  std::unordered_map<Tableau, std::size_t, Tableau::Hash> index;
  g.nodes.push_back(highest());
  g.depth.push_back(0);
  index.emplace(g.nodes.front(), 0);

  struct Hit {
    std::size_t from;
    int i;
    Tableau to;
  };
  const int rank = root_system().rank();
  std::size_t begin = 0;
  for (int d = 1; d <= depth; ++d) {
    const std::size_t end = g.nodes.size();
    const std::size_t count = end - begin;
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, count / 64)));
    std::vector<std::vector<Hit>> hits(workers);
    auto expand = [&](unsigned w) {
      for (std::size_t n = begin + w; n < end; n += workers)
        for (int i = 1; i <= rank; ++i) hits[w].push_back(Hit{n, i, f(g.nodes[n], i)});
    };
    if (workers == 1) {
      expand(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(expand, w);
      for (auto& th : pool) th.join();
    }
    // Merge in (source, i) order so node numbering does not depend on threads.
    std::vector<const Hit*> ordered;
    for (const auto& batch : hits)
      for (const auto& h : batch) ordered.push_back(&h);
    std::sort(ordered.begin(), ordered.end(),
              [](const Hit* a, const Hit* b) { return a->from != b->from ? a->from < b->from : a->i < b->i; });
    for (const Hit* h : ordered) {
      auto [it, inserted] = index.emplace(h->to, g.nodes.size());
      if (inserted) {
        if (g.nodes.size() >= node_limit)
          throw Error(ErrorCode::LimitExceeded, "crystal graph exceeds " + std::to_string(node_limit) + " nodes");
        g.nodes.push_back(h->to);
        g.depth.push_back(d);
      }
      g.edges.push_back({h->from, h->i, it->second});
    }
    begin = end;
  }
  return g;
}

std::vector<Tableau> TInfinity::enumerate(int depth, std::size_t node_limit, unsigned threads) const {
  return graph(depth, node_limit, threads).nodes;
}

}  // namespace binf
