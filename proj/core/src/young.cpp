#include "symfuse/young.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace symfuse {

namespace {

std::string cell_name(int row, int col) {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("malformed integer '" + std::string(token) + "' in '" + std::string(context) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void sort_by_decreasing_content(std::vector<Cell>& cells) {
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.content() > b.content(); });
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '(' && body.back() == ')') body = trim(body.substr(1, body.size() - 2));
  std::vector<int> parts;
  if (body.empty()) return Partition();
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string_view token = trim(body.substr(start, comma == std::string_view::npos ? body.size() - start : comma - start));
    parts.push_back(parse_int(token, text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int c = 1; c <= row(1); ++c) {
    int len = 0;
    while (len < length() && parts_[len] >= c) ++len;
    conj.push_back(len);
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  rec(rec, n, n);
  return out;
}

std::vector<Cell> addable_cells(const Partition& mu) {
  std::vector<Cell> cells;
  for (int r = 1; r <= mu.length() + 1; ++r) {
    if (r == 1 || mu.row(r - 1) > mu.row(r)) cells.push_back({r, mu.row(r) + 1});
  }
  sort_by_decreasing_content(cells);
  return cells;
}

std::vector<Cell> removable_cells(const Partition& lambda) {
  std::vector<Cell> cells;
  for (int r = 1; r <= lambda.length(); ++r) {
    if (lambda.row(r) > lambda.row(r + 1)) cells.push_back({r, lambda.row(r)});
  }
  sort_by_decreasing_content(cells);
  return cells;
}

Partition add_cell(const Partition& mu, Cell cell) {
  auto addable = addable_cells(mu);
  if (std::find(addable.begin(), addable.end(), cell) == addable.end()) {
    throw std::invalid_argument("cell " + cell_name(cell.row, cell.col) + " is not addable to (" + mu.to_string() + ")");
  }
  std::vector<int> parts = mu.parts();
  if (cell.row > mu.length()) parts.push_back(1);
  else ++parts[cell.row - 1];
  return Partition(std::move(parts));
}

Partition remove_cell(const Partition& lambda, Cell cell) {
  auto removable = removable_cells(lambda);
  if (std::find(removable.begin(), removable.end(), cell) == removable.end()) {
    throw std::invalid_argument("cell " + cell_name(cell.row, cell.col) + " is not removable from (" +
                                lambda.to_string() + ")");
  }
  std::vector<int> parts = lambda.parts();
  if (--parts[cell.row - 1] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::optional<Cell> added_cell(const Partition& mu, const Partition& lambda) {
  if (lambda.size() != mu.size() + 1) return std::nullopt;
  for (const Cell& c : addable_cells(mu)) {
    if (add_cell(mu, c) == lambda) return c;
  }
  return std::nullopt;
}

int hook_length(const Partition& lambda, Cell cell) {
  if (!lambda.contains(cell.row, cell.col)) throw std::invalid_argument("hook_length: cell outside diagram");
  int arm = lambda.row(cell.row) - cell.col;
  int leg = 0;
  while (lambda.row(cell.row + leg + 1) >= cell.col) ++leg;
  return arm + leg + 1;
}

std::uint64_t hook_product(const Partition& lambda) {
  std::uint64_t product = 1;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.row(r); ++c) product *= static_cast<std::uint64_t>(hook_length(lambda, {r, c}));
  return product;
}

std::uint64_t dimension(const Partition& lambda) {
  std::uint64_t f = 1;
  for (int k = 2; k <= lambda.size(); ++k) f *= static_cast<std::uint64_t>(k);
  return f / hook_product(lambda);
}

StandardTableau StandardTableau::from_rows(std::vector<std::vector<int>> rows) {
  StandardTableau t;
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  int n = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) throw std::invalid_argument("empty row " + std::to_string(r + 1) + " inside tableau");
    if (r > 0 && rows[r].size() > rows[r - 1].size()) {
      throw std::invalid_argument("row " + std::to_string(r + 1) + " is longer than the row above");
    }
    n += static_cast<int>(rows[r].size());
  }
  t.cells_.assign(static_cast<std::size_t>(n), Cell{});
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int v = rows[r][c];
      int row = static_cast<int>(r) + 1;
      int col = static_cast<int>(c) + 1;
      if (v < 1 || v > n || seen[v]) {
        throw std::invalid_argument("entry " + std::to_string(v) + " at cell " + cell_name(row, col) +
                                    " is out of range or repeated");
      }
      seen[v] = true;
      if (c > 0 && rows[r][c - 1] >= v) {
        throw std::invalid_argument("entries do not increase along row at cell " + cell_name(row, col));
      }
      if (r > 0 && rows[r - 1][c] >= v) {
        throw std::invalid_argument("entries do not increase down column at cell " + cell_name(row, col));
      }
      t.cells_[v - 1] = {row, col};
    }
  }
  t.rows_ = std::move(rows);
  t.n_ = n;
  return t;
}

StandardTableau StandardTableau::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::string_view body = trim(text);
  if (body.empty()) return StandardTableau();
  std::size_t start = 0;
  while (true) {
    std::size_t slash = body.find('/', start);
    std::string_view row_text = body.substr(start, slash == std::string_view::npos ? body.size() - start : slash - start);
    std::vector<int> row;
    std::istringstream in{std::string(row_text)};
    std::string token;
    while (in >> token) row.push_back(parse_int(token, text));
    if (row.empty()) throw std::invalid_argument("empty row in tableau text '" + std::string(text) + "'");
    rows.push_back(std::move(row));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return from_rows(std::move(rows));
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

Cell StandardTableau::cell_of(int k) const {
  if (k < 1 || k > n_) throw std::out_of_range("cell_of: entry " + std::to_string(k) + " not in tableau");
  return cells_[k - 1];
}

std::vector<int> StandardTableau::contents() const {
  std::vector<int> out;
  out.reserve(cells_.size());
  for (const Cell& c : cells_) out.push_back(c.content());
  return out;
}

StandardTableau StandardTableau::restrict_to(int k) const {
  if (k < 0 || k > n_) throw std::out_of_range("restrict_to: k out of range");
  std::vector<std::vector<int>> rows;
  for (const auto& r : rows_) {
    std::vector<int> kept;
    for (int v : r)
      if (v <= k) kept.push_back(v);
    if (kept.empty()) break;
    rows.push_back(std::move(kept));
  }
  return from_rows(std::move(rows));
}

StandardTableau StandardTableau::branch_down() const {
  if (n_ == 0) throw std::invalid_argument("branch_down: empty tableau");
  return restrict_to(n_ - 1);
}

StandardTableau StandardTableau::branch_up(Cell cell) const {
  auto rows = rows_;
  add_cell(shape(), cell);  // validates addability
  if (cell.row > static_cast<int>(rows.size())) rows.emplace_back();
  rows[cell.row - 1].push_back(n_ + 1);
  return from_rows(std::move(rows));
}

std::string StandardTableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  if (lambda.empty()) return {StandardTableau()};
  std::vector<StandardTableau> out;
  for (const Cell& cell : removable_cells(lambda)) {
    for (const StandardTableau& u : standard_tableaux(remove_cell(lambda, cell))) out.push_back(u.branch_up(cell));
  }
  return out;
}

std::vector<StandardTableau> branch_up_all(const StandardTableau& u) {
  std::vector<StandardTableau> out;
  for (const Cell& cell : addable_cells(u.shape())) out.push_back(u.branch_up(cell));
  return out;
}

std::vector<StandardTableau> all_standard_tableaux(int n) {
  std::vector<StandardTableau> out;
  for (const Partition& lambda : partitions_of(n)) {
    auto ts = standard_tableaux(lambda);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

}  // namespace symfuse
