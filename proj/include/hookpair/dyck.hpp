#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hookpair/cell_set.hpp"
#include "hookpair/error.hpp"
#include "hookpair/partition.hpp"
#include "hookpair/regions.hpp"

namespace hookpair {

enum class LabelKind { X, Z };

/// x_j marks the arm-(i-1) cell of row j of T (bottom to top); z_j marks the
/// arm-0 cell of row k+1-j (top to bottom).
struct Label {
  LabelKind kind = LabelKind::X;
  int index = 0;
  Cell cell;

  std::string name() const { return (kind == LabelKind::X ? "x" : "z") + std::to_string(index); }
  friend bool operator==(const Label&, const Label&) = default;
};

struct LabelSet {
  std::vector<Label> x;  // x[j-1] is x_j
  std::vector<Label> z;  // z[j-1] is z_j
};

/// Labels the cells of T_(i). When i == 1 both families sit on the same k
/// cells.
inline LabelSet label_cells(const Partition& p, int i) {
  const CellSet t = build_region(p, RegionKind::T);
  if (i < 1 || i > p.n()) throw Error(ErrorCode::IndexOutOfRange, "arm index " + std::to_string(i));
  const CellSet slice = arm_slice(t, i);
  const CellSet rightmost = arm_slice(t, 1);
  const int k = p.k();

  LabelSet out;
  // Both slices hold exactly one cell per row, and iteration is row-major.
  for (int j = 1; j <= k; ++j) out.x.push_back({LabelKind::X, j, slice.cells()[static_cast<std::size_t>(j - 1)]});
  for (int j = 1; j <= k; ++j) {
    out.z.push_back({LabelKind::Z, j, rightmost.cells()[static_cast<std::size_t>(k - j)]});
  }
  return out;
}

/// sigma_i: the 2k labels read left to right through the columns of T_(i).
struct SigmaSequence {
  int k = 0;
  std::vector<Label> labels;

  std::string to_string() const {
    std::string s;
    for (const auto& l : labels) s += l.name() + " ";
    if (!s.empty()) s.pop_back();
    return s;
  }
};

/// Orders by column; within a column x's come before z's, and each kind is
/// read bottom to top.
inline SigmaSequence build_sigma(const Partition& p, int i) {
  LabelSet ls = label_cells(p, i);
  SigmaSequence s{p.k(), {}};
  s.labels = ls.x;
  s.labels.insert(s.labels.end(), ls.z.begin(), ls.z.end());
  std::stable_sort(s.labels.begin(), s.labels.end(), [](const Label& a, const Label& b) {
    return std::tuple(a.cell.col, a.kind == LabelKind::Z, a.cell.row) <
           std::tuple(b.cell.col, b.kind == LabelKind::Z, b.cell.row);
  });
  return s;
}

struct DyckStep {
  int dir = 0;  // +1 up, -1 down
  Label label;
};

/// A validated Dyck path of length 2k with labelled steps.
class DyckPath {
 public:
  /// Checks y_0 = y_2k = 0, y_t >= 0, unit steps, k ups and k downs.
  static DyckPath from_steps(std::vector<DyckStep> steps) {
    if (steps.size() % 2 != 0) {
      throw Error(ErrorCode::NotADyckPath, "odd number of steps");
    }
    std::vector<int> y{0};
    for (std::size_t t = 0; t < steps.size(); ++t) {
      const int dir = steps[t].dir;
      if (dir != 1 && dir != -1) {
        throw Error(ErrorCode::NotADyckPath, "step " + std::to_string(t + 1) + " is not +-1");
      }
      y.push_back(y.back() + dir);
      if (y.back() < 0) {
        throw Error(ErrorCode::NotADyckPath, "path drops below zero at step " + std::to_string(t + 1));
      }
    }
    if (y.back() != 0) throw Error(ErrorCode::NotADyckPath, "path ends at height " + std::to_string(y.back()));
    return DyckPath(std::move(steps), std::move(y));
  }

  /// Unlabelled path from a string over {U, D}; step t gets index t.
  static DyckPath from_string(const std::string& word) {
    std::vector<DyckStep> steps;
    int ups = 0;
    int downs = 0;
    for (char c : word) {
      if (c == 'U') {
        steps.push_back({+1, {LabelKind::X, ++ups, {}}});
      } else if (c == 'D') {
        steps.push_back({-1, {LabelKind::Z, ++downs, {}}});
      } else {
        throw Error(ErrorCode::NotADyckPath, std::string("unexpected step character '") + c + "'");
      }
    }
    return from_steps(std::move(steps));
  }

  int semilength() const noexcept { return static_cast<int>(steps_.size() / 2); }
  const std::vector<DyckStep>& steps() const noexcept { return steps_; }
  /// y_0 .. y_2k.
  const std::vector<int>& ordinates() const noexcept { return ordinates_; }

  /// Height of step t (1-based) is y_{t-1}.
  int step_height(int t) const {
    if (t < 1 || t > static_cast<int>(steps_.size())) {
      throw Error(ErrorCode::IndexOutOfRange, "step " + std::to_string(t));
    }
    return ordinates_[static_cast<std::size_t>(t - 1)];
  }

  int max_height() const { return *std::max_element(ordinates_.begin(), ordinates_.end()); }

  std::string word() const {
    std::string s;
    for (const auto& st : steps_) s += st.dir > 0 ? 'U' : 'D';
    return s;
  }

 private:
  DyckPath(std::vector<DyckStep> steps, std::vector<int> y) : steps_(std::move(steps)), ordinates_(std::move(y)) {}

  std::vector<DyckStep> steps_;
  std::vector<int> ordinates_;
};

/// rho_i: x labels become up steps, z labels down steps.
inline DyckPath build_dyck(const SigmaSequence& s) {
  std::vector<DyckStep> steps;
  steps.reserve(s.labels.size());
  for (const Label& l : s.labels) steps.push_back({l.kind == LabelKind::X ? +1 : -1, l});
  return DyckPath::from_steps(std::move(steps));
}

inline int step_height(const DyckPath& d, int t) { return d.step_height(t); }

/// P_i: up step labelled x_j is matched with the first later down step one
/// level higher, which is labelled z_{P(j)}.
struct Pairing {
  std::vector<int> up_to_down;                 // up_to_down[j-1] = P(j)
  std::vector<std::pair<int, int>> step_pairs;  // 1-based (up step, down step)

  int operator()(int j) const {
    if (j < 1 || j > static_cast<int>(up_to_down.size())) {
      throw Error(ErrorCode::IndexOutOfRange, "pairing index " + std::to_string(j));
    }
    return up_to_down[static_cast<std::size_t>(j - 1)];
  }
};

inline Pairing pair_updown(const DyckPath& d) {
  const int k = d.semilength();
  Pairing out;
  out.up_to_down.assign(static_cast<std::size_t>(k), 0);
  // Pending up steps per level; the most recent one at height h is the one
  // that the next down step from h+1 closes.
  std::vector<std::vector<int>> pending(static_cast<std::size_t>(k) + 1);
  const auto& steps = d.steps();
  for (int t = 1; t <= 2 * k; ++t) {
    const DyckStep& st = steps[static_cast<std::size_t>(t - 1)];
    const int h = d.step_height(t);
    if (st.dir > 0) {
      pending[static_cast<std::size_t>(h)].push_back(t);
      continue;
    }
    auto& stack = pending[static_cast<std::size_t>(h - 1)];
    if (stack.empty()) {
      throw Error(ErrorCode::NoMatchingDownStep, "down step " + std::to_string(t) + " has no open up step");
    }
    const int up = stack.back();
    stack.pop_back();
    out.step_pairs.emplace_back(up, t);
    const int j = steps[static_cast<std::size_t>(up - 1)].label.index;
    if (j < 1 || j > k || out.up_to_down[static_cast<std::size_t>(j - 1)] != 0) {
      throw Error(ErrorCode::NoMatchingDownStep, "up label index " + std::to_string(j) + " is invalid or repeated");
    }
    out.up_to_down[static_cast<std::size_t>(j - 1)] = st.label.index;
  }
  for (const auto& stack : pending) {
    if (!stack.empty()) throw Error(ErrorCode::NoMatchingDownStep, "unmatched up step " + std::to_string(stack.back()));
  }
  std::sort(out.step_pairs.begin(), out.step_pairs.end());
  return out;
}

}  // namespace hookpair
