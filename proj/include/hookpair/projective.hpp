#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hookpair/cell_set.hpp"
#include "hookpair/error.hpp"
#include "hookpair/multiset.hpp"
#include "hookpair/partition.hpp"
#include "hookpair/regions.hpp"

namespace hookpair {

/// k >= l_1 > ... > l_m > 0.
class StrictPartition {
 public:
  static StrictPartition make(std::vector<int> parts, int k) {
    if (k < 1) throw Error(ErrorCode::InvalidBound, "k must be positive");
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (parts[j] < 1) throw Error(ErrorCode::NotStrict, "parts must be positive");
      if (j > 0 && parts[j] >= parts[j - 1]) throw Error(ErrorCode::NotStrict, "parts must strictly decrease");
    }
    if (!parts.empty() && parts.front() > k) {
      throw Error(ErrorCode::PartExceedsN, "largest part " + std::to_string(parts.front()) + " exceeds k=" +
                                               std::to_string(k));
    }
    return StrictPartition(std::move(parts), k);
  }

  int k() const noexcept { return k_; }
  int m() const noexcept { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const noexcept { return parts_; }
  int part(int j) const { return parts_.at(static_cast<std::size_t>(j - 1)); }

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

 private:
  StrictPartition(std::vector<int> parts, int k) : parts_(std::move(parts)), k_(k) {}
  std::vector<int> parts_;
  int k_ = 0;
};

/// A partition with Frobenius coordinates (l_1..l_m | l_1-1..l_m-1) and
/// n = k+1.
struct ClassBPartition {
  Partition alpha;
  StrictPartition lambda;

  int m() const noexcept { return lambda.m(); }
  int k() const noexcept { return alpha.k(); }
};

inline ClassBPartition alpha_from_strict(const StrictPartition& l) {
  const int k = l.k();
  const int m = l.m();
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  for (int j = 1; j <= m; ++j) parts[static_cast<std::size_t>(j - 1)] = l.part(j) + j;
  // Below the diagonal, row r counts the diagonal columns reaching down to it;
  // column j has l_j + j - 1 cells.
  for (int r = m + 1; r <= k; ++r) {
    int c = 0;
    for (int j = 1; j <= m; ++j) c += l.part(j) + j - 1 >= r;
    parts[static_cast<std::size_t>(r - 1)] = c;
  }
  return {Partition::make(std::move(parts), k, k + 1), l};
}

/// Recovers l from the diagonal and accepts iff the column constraint holds.
inline std::optional<ClassBPartition> is_class_B(const Partition& p) {
  if (p.n() != p.k() + 1) {
    throw Error(ErrorCode::WrongN, "class B needs n = k+1, got k=" + std::to_string(p.k()) +
                                       ", n=" + std::to_string(p.n()));
  }
  int m = 0;
  while (m < p.k() && p.part(m + 1) >= m + 1) ++m;
  const Partition conj = conjugate(p);
  std::vector<int> lambda;
  for (int j = 1; j <= m; ++j) {
    const int l = p.part(j) - j;
    if (l < 1 || conj.part(j) != l + j - 1) return std::nullopt;
    lambda.push_back(l);
  }
  return ClassBPartition{p, StrictPartition::make(std::move(lambda), p.k())};
}

/// Regions that carry a diagonal. TPrefix and TSlice are T_(i) and T_[i],
/// which share T's diagonal.
enum class DiagonalKind { D, R, T, SQ, Tstar, TPrefix, TSlice };

inline std::optional<DiagonalKind> diagonal_kind(RegionKind kind) {
  switch (kind) {
    case RegionKind::D: return DiagonalKind::D;
    case RegionKind::R: return DiagonalKind::R;
    case RegionKind::T: return DiagonalKind::T;
    case RegionKind::SQ: return DiagonalKind::SQ;
    case RegionKind::Tstar: return DiagonalKind::Tstar;
    default: return std::nullopt;
  }
}

/// The diagonal is the anti-diagonal line row + col == sum.
struct DiagonalSpec {
  DiagonalKind kind = DiagonalKind::D;
  int sum = 0;
  std::vector<Cell> cells;  // the listed diagonal cells, top to bottom
};

inline DiagonalSpec diagonal_spec(DiagonalKind kind, const ClassBPartition& b) {
  const int k = b.k();
  const int m = b.m();
  const int a1 = b.alpha.largest();
  const int ak = b.alpha.smallest();
  DiagonalSpec d{kind, 0, {}};
  switch (kind) {
    case DiagonalKind::D:
      d.sum = k + 1;
      for (int j = 1; j <= m; ++j) d.cells.push_back({k + 1 - j, j});
      break;
    case DiagonalKind::R:
      d.sum = k + 1;
      for (int j = 1; j <= k; ++j) d.cells.push_back({k + 1 - j, j});
      break;
    case DiagonalKind::T:
    case DiagonalKind::SQ:
    case DiagonalKind::TPrefix:
    case DiagonalKind::TSlice:
      d.sum = k + 1 + a1;
      for (int j = 1; j <= k - m; ++j) d.cells.push_back({k + 1 - j, a1 + j});
      break;
    case DiagonalKind::Tstar:
      d.sum = 2 * k + 2 - ak;
      for (int j = 1; j <= m; ++j) d.cells.push_back({k + 1 - j, k + 1 - ak + j});
      break;
  }
  return d;
}

struct PQSplit {
  CellSet p;  // on or below the diagonal
  CellSet q;  // strictly above
};

inline PQSplit split_by_sum(const CellSet& g, int sum) {
  return {g.filter([sum](Cell x) { return x.row + x.col <= sum; }),
          g.filter([sum](Cell x) { return x.row + x.col > sum; })};
}

inline PQSplit split_pq(const CellSet& g, DiagonalKind kind, const ClassBPartition& b) {
  return split_by_sum(g, diagonal_spec(kind, b).sum);
}

inline PQSplit split_pq(const CellSet& g, RegionKind kind, const ClassBPartition& b) {
  auto dk = diagonal_kind(kind);
  if (!dk) throw Error(ErrorCode::KindWithoutDiagonal, std::string(to_string(kind)));
  return split_pq(g, *dk, b);
}

/// Smallest row whose T_[i] cell lies strictly above T's diagonal.
inline std::optional<int> shift_row(const ClassBPartition& b, int i) {
  const int k = b.k();
  if (i < 1 || i > k + 1) throw Error(ErrorCode::IndexOutOfRange, "arm index " + std::to_string(i));
  const int sum = diagonal_spec(DiagonalKind::T, b).sum;
  for (const Cell& x : arm_slice(b.alpha, i)) {
    if (x.row + x.col > sum) return x.row;  // cells come in row order
  }
  return std::nullopt;
}

struct ShiftedT {
  CellSet cells;
  std::optional<int> u;
};

/// T^i: rows u..k of T pushed right so each ends in column a_1+k+1. Equal
/// to T when no T_[i] cell is above the diagonal.
inline ShiftedT shift_Ti(const ClassBPartition& b, int i) {
  const auto u = shift_row(b, i);
  const CellSet t = build_region(b.alpha, RegionKind::T);
  if (!u) return {t, std::nullopt};
  const int k = b.k();
  const int a1 = b.alpha.largest();
  std::vector<RowInterval> rows;
  for (const auto& r : t.rows()) {
    rows.push_back(r.row < *u ? r : RowInterval{r.row, a1 + 1, a1 + k + 1});
  }
  return {CellSet::from_rows(rows), u};
}

/// The four inequality pairs on the shift row u. A clause that refers to
/// a_0 is vacuous.
struct TechpropReport {
  int i = 0;
  int u = 0;
  std::array<bool, 4> parts{};

  bool all() const noexcept { return parts[0] && parts[1] && parts[2] && parts[3]; }
};

inline TechpropReport check_prop_techprop(const ClassBPartition& b, int i) {
  const auto u_opt = shift_row(b, i);
  if (!u_opt) {
    throw Error(ErrorCode::NoShiftRow, "no T_[" + std::to_string(i) + "] cell above the diagonal");
  }
  const int u = *u_opt;
  const Partition& a = b.alpha;
  // nullopt stands for a_0, which every clause treats as +infinity.
  auto alpha = [&](int j) -> std::optional<int> {
    if (j <= 0) return std::nullopt;
    return a.part(j);
  };
  auto le = [](std::optional<int> lhs, std::optional<int> rhs) { return !rhs || (lhs && *lhs <= *rhs); };

  TechpropReport rep{i, u, {}};
  rep.parts[0] = u - a.part(u) > i - 1 && (u == 1 || u - 1 - a.part(u - 1) <= i - 1);
  rep.parts[1] = u > b.m();
  rep.parts[2] = le(u, alpha(u - i)) && a.part(u - i + 1) <= u;
  rep.parts[3] = le(a.part(u) + i, alpha(u - i)) && (u == 1 || a.part(u - 1) + i >= a.part(u - i + 1));
  return rep;
}

/// The s with a_s <= i-1 < a_{s-1}, taking a_0 = +infinity and a_{k+1} = 0.
inline int split_index(const Partition& a, int i) {
  int s = 1;
  while (s <= a.k() && a.part(s) > i - 1) ++s;
  return s;
}

/// Multiset of legs (in g) of the cells of e whose arm in g is i-1.
inline IntMultiset legs_at_arm(const CellSet& g, const CellSet& e, int i) {
  IntMultiset out;
  for (const Cell& x : e) {
    if (g.arm(x) == i - 1) out.add(g.leg(x));
  }
  return out;
}

struct NamedCheck {
  std::string name;
  bool ok = false;
};

/// Leg-multiset bookkeeping for one arm value i-1:
///   M1 in T^i, M2 in (T^i)*, M3 in p(T) (measured in T), M4 in q(D)
///   (measured in D), with M1 = M11 + M12 split at T^i's diagonal and
///   M2 = M21 + M22 + M23 split at column k+1 and at (T^i)*'s diagonal.
///
/// s is the row with a_s <= i-1 < a_{s-1}; split_row is the bottom row of
/// the shifted arm-(i-1) column of T^i, found by enumeration. The two agree
/// when s <= u, and split_row == min(s, u) in general.
struct MDecomposition {
  int i = 0;
  int u = 0;
  int s = 0;
  int split_row = 0;
  IntMultiset m1, m2, m3, m4, m11, m12, m21, m22, m23;
  std::vector<NamedCheck> structural;
  std::vector<NamedCheck> ranges;               // closed forms in terms of s
  std::vector<NamedCheck> ranges_at_split_row;  // the same forms with split_row

  static bool all_ok(const std::vector<NamedCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.ok; });
  }
  bool structural_ok() const { return all_ok(structural); }
  bool ranges_ok() const { return all_ok(ranges); }
  bool ranges_at_split_row_ok() const { return all_ok(ranges_at_split_row); }
  /// Every displayed equality, with s as defined by the a_s inequalities.
  bool passes() const { return structural_ok() && ranges_ok(); }
};

inline MDecomposition m_decomposition(const ClassBPartition& b, int i) {
  const ShiftedT shifted = shift_Ti(b, i);
  if (!shifted.u) {
    throw Error(ErrorCode::NoShiftRow, "no T_[" + std::to_string(i) + "] cell above the diagonal");
  }
  const int k = b.k();
  const int a1 = b.alpha.largest();
  const CellSet& ti = shifted.cells;
  const CellSet ti_star = rotate180(ti);
  const CellSet t = build_region(b.alpha, RegionKind::T);
  const CellSet d = build_region(b.alpha, RegionKind::D);

  MDecomposition md;
  md.i = i;
  md.u = *shifted.u;
  md.s = split_index(b.alpha, i);
  md.split_row = ti.column(a1 + k + 2 - i).front().row;

  const int t_sum = diagonal_spec(DiagonalKind::T, b).sum;
  // rotate180 places rows 1..k+1-u of (T^i)* in columns 1..k+1; in that frame
  // the diagonal inherited from T* lies on row + col == 2k+2.
  const int star_sum = 2 * k + 2;
  const PQSplit ti_pq = split_by_sum(ti, t_sum);
  md.m1 = legs_at_arm(ti, ti, i);
  md.m11 = legs_at_arm(ti, ti_pq.p, i);
  md.m12 = legs_at_arm(ti, ti_pq.q, i);

  md.m2 = legs_at_arm(ti_star, ti_star, i);
  md.m21 = legs_at_arm(ti_star, ti_star.filter([&](Cell x) { return x.col <= k + 1; }), i);
  md.m22 = legs_at_arm(ti_star, ti_star.filter([&](Cell x) { return x.col > k + 1 && x.row + x.col <= star_sum; }), i);
  md.m23 = legs_at_arm(ti_star, ti_star.filter([&](Cell x) { return x.col > k + 1 && x.row + x.col > star_sum; }), i);

  md.m3 = legs_at_arm(t, split_pq(t, DiagonalKind::T, b).p, i);
  md.m4 = legs_at_arm(d, split_pq(d, DiagonalKind::D, b).q, i);

  md.structural = {
      {"M1 = M11 + M12", md.m1 == md.m11 + md.m12},
      {"M2 = M21 + M22 + M23", md.m2 == md.m21 + md.m22 + md.m23},
      {"M1 = M2", md.m1 == md.m2},
      {"M11 = M3", md.m11 == md.m3},
      {"M23 = M4", md.m23 == md.m4},
      {"M3 = M4 + {0..i-2}", md.m3 == md.m4 + integer_range(0, i - 2)},
  };
  auto range_checks = [&](int s, const std::string& name) {
    return std::vector<NamedCheck>{
        {"M12 = {u-" + name + "..k-" + name + "}", md.m12 == integer_range(md.u - s, k - s)},
        {"M21 = {0..k-" + name + "}", md.m21 == integer_range(0, k - s)},
        {"M22 = {u-" + name + "..i-2}", md.m22 == integer_range(md.u - s, i - 2)},
    };
  };
  md.ranges = range_checks(md.s, "s");
  md.ranges_at_split_row = range_checks(md.split_row, "split_row");
  return md;
}

struct ProjectiveStep {
  int i = 0;
  std::optional<int> u;
  int s = 0;
  std::optional<TechpropReport> techprop;
  std::optional<MDecomposition> mdec;
};

/// Checks AL(p(SQ)) = AL(p(R)) + AL(q(D)) with every statistic measured in
/// the enclosing diagram (SQ, R, D), the cell identity p(SQ) = p(T), and
/// the per-i proof steps.
struct ProjectiveReport {
  ClassBPartition b;
  ArmLegMultiset lhs, rhs;
  std::optional<std::string> difference;
  bool p_sq_equals_p_t = false;
  bool al_p_sq_equals_al_p_t = false;
  std::vector<ProjectiveStep> steps;

  bool theorem_ok() const noexcept { return !difference; }
  bool techprop_ok() const {
    return std::all_of(steps.begin(), steps.end(), [](const ProjectiveStep& s) { return !s.techprop || s.techprop->all(); });
  }
  /// Structural M identities and the closed-form ranges at the split row.
  bool mdec_ok() const {
    return std::all_of(steps.begin(), steps.end(), [](const ProjectiveStep& s) {
      return !s.mdec || (s.mdec->structural_ok() && s.mdec->ranges_at_split_row_ok());
    });
  }
  /// The closed-form ranges written with s.
  bool range_formulas_ok() const {
    return std::all_of(steps.begin(), steps.end(), [](const ProjectiveStep& s) { return !s.mdec || s.mdec->ranges_ok(); });
  }
  bool passed() const { return theorem_ok() && p_sq_equals_p_t && al_p_sq_equals_al_p_t && techprop_ok() && mdec_ok(); }
};

inline ProjectiveReport verify_projective(const ClassBPartition& b) {
  const Partition& a = b.alpha;
  const CellSet sq = build_region(a, RegionKind::SQ);
  const CellSet t = build_region(a, RegionKind::T);
  const CellSet r = build_region(a, RegionKind::R);
  const CellSet d = build_region(a, RegionKind::D);
  const CellSet p_sq = split_pq(sq, DiagonalKind::SQ, b).p;
  const CellSet p_t = split_pq(t, DiagonalKind::T, b).p;

  ProjectiveReport rep{b, {}, {}, std::nullopt, false, false, {}};
  rep.lhs = al_multiset(sq, p_sq);
  rep.rhs = al_multiset(r, split_pq(r, DiagonalKind::R, b).p) + al_multiset(d, split_pq(d, DiagonalKind::D, b).q);
  if (auto diff = first_difference(rep.lhs, rep.rhs)) {
    rep.difference = "multiplicity of " + diff->key.to_string() + " is " + std::to_string(diff->left) +
                     " on the left, " + std::to_string(diff->right) + " on the right";
  }
  rep.p_sq_equals_p_t = p_sq == p_t;
  rep.al_p_sq_equals_al_p_t = rep.p_sq_equals_p_t && al_multiset(sq, p_sq) == al_multiset(t, p_t);

  for (int i = 1; i <= b.k() + 1; ++i) {
    ProjectiveStep step;
    step.i = i;
    step.u = shift_row(b, i);
    step.s = split_index(a, i);
    if (step.u) {
      step.techprop = check_prop_techprop(b, i);
      step.mdec = m_decomposition(b, i);
    }
    rep.steps.push_back(std::move(step));
  }
  return rep;
}

}  // namespace hookpair
