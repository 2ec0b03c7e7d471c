#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hookpair/error.hpp"

namespace hookpair {

/// A unit cell. Rows are counted from the bottom, columns from the left.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;

  std::string to_string() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
  }
};

/// Occupied columns of one row, inclusive on both ends.
struct RowInterval {
  int row = 0;
  int col_min = 0;
  int col_max = 0;

  int length() const noexcept { return col_max - col_min + 1; }
  friend bool operator==(const RowInterval&, const RowInterval&) = default;
};

/// An immutable finite set of cells.
///
/// Cells are kept sorted twice, by (row, col) and by (col, row), so the arm
/// and leg queries are logarithmic in the set size.
class CellSet {
 public:
  CellSet() = default;

  explicit CellSet(std::vector<Cell> cells) : by_row_(std::move(cells)) {
    std::sort(by_row_.begin(), by_row_.end());
    by_row_.erase(std::unique(by_row_.begin(), by_row_.end()), by_row_.end());
    by_col_ = by_row_;
    std::sort(by_col_.begin(), by_col_.end(), col_major);
  }

  CellSet(std::initializer_list<Cell> cells) : CellSet(std::vector<Cell>(cells)) {}

  /// Builds a set from row intervals; intervals with col_max < col_min are
  /// empty rows and contribute nothing.
  static CellSet from_rows(const std::vector<RowInterval>& rows) {
    std::vector<Cell> cells;
    for (const auto& r : rows) {
      for (int c = r.col_min; c <= r.col_max; ++c) cells.push_back({r.row, c});
    }
    return CellSet(std::move(cells));
  }

  std::size_t size() const noexcept { return by_row_.size(); }
  bool empty() const noexcept { return by_row_.empty(); }

  auto begin() const noexcept { return by_row_.begin(); }
  auto end() const noexcept { return by_row_.end(); }
  const std::vector<Cell>& cells() const noexcept { return by_row_; }

  bool contains(Cell x) const { return std::binary_search(by_row_.begin(), by_row_.end(), x); }

  int min_row() const { return require_nonempty().front().row; }
  int max_row() const { return require_nonempty().back().row; }
  int min_col() const {
    require_nonempty();
    return by_col_.front().col;
  }
  int max_col() const {
    require_nonempty();
    return by_col_.back().col;
  }

  /// Cells strictly to the right of x in its row.
  int arm(Cell x) const {
    require_member(x);
    auto row_end = std::upper_bound(by_row_.begin(), by_row_.end(), Cell{x.row, max_int});
    auto self = std::lower_bound(by_row_.begin(), by_row_.end(), x);
    return static_cast<int>(row_end - self) - 1;
  }

  /// Cells strictly below x in its column.
  int leg(Cell x) const {
    require_member(x);
    auto col_begin = std::lower_bound(by_col_.begin(), by_col_.end(), Cell{min_int, x.col}, col_major);
    auto self = std::lower_bound(by_col_.begin(), by_col_.end(), x, col_major);
    return static_cast<int>(self - col_begin);
  }

  /// Cells strictly above x in its column.
  int coleg(Cell x) const {
    require_member(x);
    auto col_end = std::upper_bound(by_col_.begin(), by_col_.end(), Cell{max_int, x.col}, col_major);
    auto self = std::lower_bound(by_col_.begin(), by_col_.end(), x, col_major);
    return static_cast<int>(col_end - self) - 1;
  }

  int hook(Cell x) const { return arm(x) + leg(x) + 1; }

  int column_length(int col) const {
    auto lo = std::lower_bound(by_col_.begin(), by_col_.end(), Cell{min_int, col}, col_major);
    auto hi = std::upper_bound(by_col_.begin(), by_col_.end(), Cell{max_int, col}, col_major);
    return static_cast<int>(hi - lo);
  }

  /// Cells of one column ordered bottom to top.
  std::vector<Cell> column(int col) const {
    auto lo = std::lower_bound(by_col_.begin(), by_col_.end(), Cell{min_int, col}, col_major);
    auto hi = std::upper_bound(by_col_.begin(), by_col_.end(), Cell{max_int, col}, col_major);
    return {lo, hi};
  }

  /// Cells of one row ordered left to right.
  std::vector<Cell> row(int r) const {
    auto lo = std::lower_bound(by_row_.begin(), by_row_.end(), Cell{r, min_int});
    auto hi = std::upper_bound(by_row_.begin(), by_row_.end(), Cell{r, max_int});
    return {lo, hi};
  }

  /// One (min, max) interval per occupied row, rows ascending. Only
  /// meaningful as a shape description when is_skew() holds.
  std::vector<RowInterval> rows() const {
    std::vector<RowInterval> out;
    for (const Cell& x : by_row_) {
      if (out.empty() || out.back().row != x.row) {
        out.push_back({x.row, x.col, x.col});
      } else {
        out.back().col_max = x.col;
      }
    }
    return out;
  }

  /// Every occupied row is contiguous and both row edges weakly increase
  /// going up. Unoccupied rows are skipped.
  bool is_skew() const {
    std::optional<RowInterval> prev;
    for (const RowInterval& r : rows()) {
      if (static_cast<int>(row(r.row).size()) != r.length()) return false;
      if (prev && (r.col_min < prev->col_min || r.col_max < prev->col_max)) return false;
      prev = r;
    }
    return true;
  }

  bool is_subset_of(const CellSet& other) const {
    return std::includes(other.by_row_.begin(), other.by_row_.end(), by_row_.begin(), by_row_.end());
  }

  template <typename Pred>
  CellSet filter(Pred&& keep) const {
    std::vector<Cell> out;
    std::copy_if(by_row_.begin(), by_row_.end(), std::back_inserter(out), std::forward<Pred>(keep));
    return CellSet(std::move(out));
  }

  template <typename Fn>
  CellSet transform(Fn&& fn) const {
    std::vector<Cell> out;
    out.reserve(by_row_.size());
    std::transform(by_row_.begin(), by_row_.end(), std::back_inserter(out), std::forward<Fn>(fn));
    return CellSet(std::move(out));
  }

  friend bool operator==(const CellSet& a, const CellSet& b) { return a.by_row_ == b.by_row_; }

 private:
  static constexpr int min_int = std::numeric_limits<int>::min();
  static constexpr int max_int = std::numeric_limits<int>::max();

  static bool col_major(const Cell& a, const Cell& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  }

  const std::vector<Cell>& require_nonempty() const {
    if (by_row_.empty()) throw Error(ErrorCode::EmptySet, "cell set is empty");
    return by_row_;
  }

  void require_member(Cell x) const {
    if (!contains(x)) throw Error(ErrorCode::CellNotInSet, x.to_string());
  }

  std::vector<Cell> by_row_;
  std::vector<Cell> by_col_;
};

inline CellSet set_union(const CellSet& a, const CellSet& b) {
  std::vector<Cell> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return CellSet(std::move(out));
}

inline CellSet set_difference(const CellSet& a, const CellSet& b) {
  std::vector<Cell> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return CellSet(std::move(out));
}

inline CellSet translate(const CellSet& g, int drow, int dcol) {
  return g.transform([=](Cell x) { return Cell{x.row + drow, x.col + dcol}; });
}

/// Translates so the lowest occupied row and leftmost occupied column are 1.
/// The empty set normalizes to itself.
inline CellSet normalize(const CellSet& g) {
  if (g.empty()) return g;
  return translate(g, 1 - g.min_row(), 1 - g.min_col());
}

/// Rotation through 180 degrees inside the bounding box, then normalized.
inline CellSet rotate180(const CellSet& g) {
  if (g.empty()) throw Error(ErrorCode::EmptySet, "cannot rotate an empty cell set");
  const int rs = g.min_row() + g.max_row();
  const int cs = g.min_col() + g.max_col();
  return normalize(g.transform([=](Cell x) { return Cell{rs - x.row, cs - x.col}; }));
}

/// Mirror image about a vertical axis, then normalized.
inline CellSet reflect_vertical(const CellSet& g) {
  if (g.empty()) throw Error(ErrorCode::EmptySet, "cannot reflect an empty cell set");
  const int cs = g.min_col() + g.max_col();
  return normalize(g.transform([=](Cell x) { return Cell{x.row, cs - x.col}; }));
}

}  // namespace hookpair
