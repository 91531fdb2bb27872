#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "binf/cartan.hpp"
#include "binf/fundamental_crystal.hpp"

namespace binf {

using Row = std::vector<Letter>;

/// An element of T(infinity): a marginally large semistandard tableau.
/// Instances are only produced by TInfinity, so they always validate.
class Tableau {
 public:
  const LieType& type() const { return type_; }
  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(int i) const { return rows_[static_cast<std::size_t>(i - 1)]; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  std::size_t box_count() const;

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.type_ == b.type_ && a.rows_ == b.rows_; }

  struct Hash {
    std::size_t operator()(const Tableau& t) const noexcept;
  };

 private:
  friend class TInfinity;
  Tableau(LieType type, std::vector<Row> rows) : type_(type), rows_(std::move(rows)) {}

  LieType type_;
  std::vector<Row> rows_;
};

/// One violated condition, with 1-based row/column (0 when not applicable).
struct TableauViolation {
  int row = 0;
  int column = 0;
  std::string message;
};

/// Subgraph of the crystal T(infinity) reachable from T_infinity by at most
/// `depth` applications of the f_i. Node k was discovered at depth[k].
struct CrystalGraph {
  struct Edge {
    std::size_t from;
    int i;
    std::size_t to;
  };
  std::vector<Tableau> nodes;
  std::vector<int> depth;
  std::vector<Edge> edges;
};

/// The crystal T(infinity) of one type.
///
/// The crystal operators act on the far-Eastern reading (columns right to
/// left, each column top to bottom) through FundamentalCrystal's tensor
/// rule. Afterwards the tableau is put back into marginally large form by
/// inserting or deleting one basic column 1..k at the left.
class TInfinity {
 public:
  static constexpr std::size_t kDefaultNodeLimit = 5'000'000;

  explicit TInfinity(LieType type);

  const LieType& type() const { return letters_.type(); }
  const RootSystem& root_system() const { return letters_.root_system(); }
  const FundamentalCrystal& letters() const { return letters_; }
  /// r for A, B, C; r - 1 for D; 2 for G2.
  int num_rows() const { return num_rows_; }

  /// The unique element of weight zero.
  Tableau highest() const;

  std::vector<TableauViolation> violations(const std::vector<Row>& rows) const;
  /// Throws InvalidTableau listing every violation.
  Tableau validate(std::vector<Row> rows) const;

  /// Rows with the forced leading run of each row removed.
  std::vector<Row> reduced_form(const Tableau& t) const;
  /// Inverse of reduced_form: rebuilds the forced runs bottom-up.
  Tableau from_reduced(const std::vector<Row>& reduced) const;

  std::vector<Letter> reading(const Tableau& t) const;

  Tableau f(const Tableau& t, int i) const;
  std::optional<Tableau> e(const Tableau& t, int i) const;
  int eps(const Tableau& t, int i) const;
  /// eps_i + <h_i, wt>; may be negative.
  int phi(const Tableau& t, int i) const;

  /// wt(T) in Q^-, from letter weights: each box x of row j contributes
  /// -(d(x) - d(j)).
  RootVector weight(const Tableau& t) const;

  /// Breadth-first exploration of the f_i-graph down to `depth`.
  /// Throws LimitExceeded when more than `node_limit` nodes are reached.
  CrystalGraph graph(int depth, std::size_t node_limit = kDefaultNodeLimit, unsigned threads = 1) const;
  std::vector<Tableau> enumerate(int depth, std::size_t node_limit = kDefaultNodeLimit, unsigned threads = 1) const;

 private:
  void check(const Tableau& t) const;
  bool allowed_in_row(int row, Letter x) const;
  void normalize(std::vector<Row>& rows) const;
  std::vector<std::pair<int, std::size_t>> reading_cells(const std::vector<Row>& rows) const;

  FundamentalCrystal letters_;
  int num_rows_;
};

}  // namespace binf
