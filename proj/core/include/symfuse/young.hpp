#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symfuse {

/// Weakly decreasing sequence of positive parts. The empty partition is valid.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if parts are not positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// "2,2" -> (2,2); "" -> empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }  // n = sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Row length, 1-based; zero beyond the last row.
  int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  bool contains(int row, int col) const { return col >= 1 && col <= this->row(row); }

  Partition conjugate() const;
  std::string to_string() const;  // "2,2"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

struct Cell {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  int content() const { return col - row; }
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Addable cells of mu, sorted by decreasing content.
std::vector<Cell> addable_cells(const Partition& mu);
/// Removable cells of lambda, sorted by decreasing content.
std::vector<Cell> removable_cells(const Partition& lambda);

/// Partition with one more cell at `cell`; throws std::invalid_argument if not addable.
Partition add_cell(const Partition& mu, Cell cell);
/// Partition with `cell` removed; throws std::invalid_argument if not removable.
Partition remove_cell(const Partition& lambda, Cell cell);

/// The cell lambda/mu when mu -> lambda (one-cell addition), otherwise nullopt.
std::optional<Cell> added_cell(const Partition& mu, const Partition& lambda);

int hook_length(const Partition& lambda, Cell cell);
/// Product of all hook lengths; equals n!/f_lambda.
std::uint64_t hook_product(const Partition& lambda);
/// Number of standard tableaux of shape lambda.
std::uint64_t dimension(const Partition& lambda);

/// Standard Young tableau, stored as rows of entries.
class StandardTableau {
 public:
  StandardTableau() = default;  // the empty tableau, n = 0

  /// Throws std::invalid_argument naming the offending cell if the rows do
  /// not form a standard tableau on 1..n.
  static StandardTableau from_rows(std::vector<std::vector<int>> rows);
  /// "1 2/3 4" -> rows (1,2),(3,4). Throws std::invalid_argument.
  static StandardTableau parse(std::string_view text);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return n_; }
  Partition shape() const;

  /// Cell holding k, 1 <= k <= n.
  Cell cell_of(int k) const;
  /// Content of the cell holding k.
  int content(int k) const { return cell_of(k).content(); }
  /// c_1, ..., c_n.
  std::vector<int> contents() const;

  /// Tableau on 1..k holding the entries <= k.
  StandardTableau restrict_to(int k) const;
  /// Entry n removed. Throws std::invalid_argument on the empty tableau.
  StandardTableau branch_down() const;
  /// Adds entry n+1 at `cell`, which must be addable to the shape.
  StandardTableau branch_up(Cell cell) const;

  std::string to_string() const;  // "1 2/3 4"

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  std::vector<Cell> cells_;  // cells_[k-1] holds k
  int n_ = 0;
};

/// All standard tableaux of shape lambda. Built by placing n, n-1, ... in
/// removable cells recursively; the order is deterministic.
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

/// Standard tableaux T of degree n+1 with T.branch_down() == u.
std::vector<StandardTableau> branch_up_all(const StandardTableau& u);

/// All standard tableaux of all shapes of size n.
std::vector<StandardTableau> all_standard_tableaux(int n);

}  // namespace symfuse
