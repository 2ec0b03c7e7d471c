#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hookpair/cell_set.hpp"
#include "hookpair/error.hpp"
#include "hookpair/partition.hpp"

namespace hookpair {

/// The named regions built from a partition.
///
///   D       Young diagram, row i has a_{k-i+1} cells starting at column 1
///   R       k x n rectangle
///   T       row i spans a_1-a_i+1 .. n+a_1-a_i
///   V       rows k+1..2k, right-justified at column n+a_1
///   SQ      T union V
///   Tstar   T rotated by 180 degrees, row i spans a_{k-i+1}-a_k+1 .. n+a_{k-i+1}-a_k
///   R1, R2  each row of R split after column n-a_{k-i+1}
///   T1star, T2star  each row of T* split after column n-a_k
enum class RegionKind { D, R, T, V, SQ, Tstar, R1, R2, T1star, T2star };

inline constexpr std::array<RegionKind, 10> all_region_kinds = {
    RegionKind::D,     RegionKind::R,  RegionKind::T,  RegionKind::V,      RegionKind::SQ,
    RegionKind::Tstar, RegionKind::R1, RegionKind::R2, RegionKind::T1star, RegionKind::T2star};

constexpr std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::D: return "D";
    case RegionKind::R: return "R";
    case RegionKind::T: return "T";
    case RegionKind::V: return "V";
    case RegionKind::SQ: return "SQ";
    case RegionKind::Tstar: return "Tstar";
    case RegionKind::R1: return "R1";
    case RegionKind::R2: return "R2";
    case RegionKind::T1star: return "T1star";
    case RegionKind::T2star: return "T2star";
  }
  return "?";
}

inline RegionKind parse_region(std::string_view name) {
  for (RegionKind kind : all_region_kinds) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorCode::UnknownRegion, std::string(name));
}

/// Builds a region in the absolute coordinates of its defining formula.
inline CellSet build_region(const Partition& p, RegionKind kind) {
  const int k = p.k();
  const int n = p.n();
  const int a1 = p.largest();
  const int ak = p.smallest();
  // Part of the row-reversed partition: row i of D has length rev(i).
  auto rev = [&](int i) { return p.part(k - i + 1); };

  std::vector<RowInterval> rows;
  switch (kind) {
    case RegionKind::D:
      for (int i = 1; i <= k; ++i) rows.push_back({i, 1, rev(i)});
      break;
    case RegionKind::R:
      for (int i = 1; i <= k; ++i) rows.push_back({i, 1, n});
      break;
    case RegionKind::T:
      for (int i = 1; i <= k; ++i) rows.push_back({i, a1 - p.part(i) + 1, n + a1 - p.part(i)});
      break;
    case RegionKind::V:
      for (int i = k + 1; i <= 2 * k; ++i) rows.push_back({i, n + a1 - p.part(i - k) + 1, n + a1});
      break;
    case RegionKind::SQ:
      return set_union(build_region(p, RegionKind::T), build_region(p, RegionKind::V));
    case RegionKind::Tstar:
      for (int i = 1; i <= k; ++i) rows.push_back({i, rev(i) - ak + 1, n + rev(i) - ak});
      break;
    case RegionKind::R1:
      for (int i = 1; i <= k; ++i) rows.push_back({i, n - rev(i) + 1, n});
      break;
    case RegionKind::R2:
      for (int i = 1; i <= k; ++i) rows.push_back({i, 1, n - rev(i)});
      break;
    case RegionKind::T1star:
      for (int i = 1; i <= k; ++i) rows.push_back({i, rev(i) - ak + 1, n - ak});
      break;
    case RegionKind::T2star:
      for (int i = 1; i <= k; ++i) rows.push_back({i, n - ak + 1, n + rev(i) - ak});
      break;
  }
  return CellSet::from_rows(rows);
}

/// Longest row of g, or 0 when g is empty.
inline int longest_row(const CellSet& g) {
  int best = 0;
  for (const auto& r : g.rows()) best = std::max(best, r.length());
  return best;
}

/// Cells of g whose arm in g is exactly i-1.
inline CellSet arm_slice(const CellSet& g, int i) {
  if (i < 1 || i > longest_row(g)) {
    throw Error(ErrorCode::IndexOutOfRange, "arm index " + std::to_string(i));
  }
  return g.filter([&](Cell x) { return g.arm(x) == i - 1; });
}

/// Cells of g whose arm in g is at most i-1.
inline CellSet arm_prefix(const CellSet& g, int i) {
  if (i < 1 || i > longest_row(g)) {
    throw Error(ErrorCode::IndexOutOfRange, "arm index " + std::to_string(i));
  }
  return g.filter([&](Cell x) { return g.arm(x) <= i - 1; });
}

/// T_[i] of the partition's T region, 1 <= i <= n.
inline CellSet arm_slice(const Partition& p, int i) {
  if (i < 1 || i > p.n()) throw Error(ErrorCode::IndexOutOfRange, "arm index " + std::to_string(i));
  return arm_slice(build_region(p, RegionKind::T), i);
}

/// T_(i) of the partition's T region, 1 <= i <= n.
inline CellSet arm_prefix(const Partition& p, int i) {
  if (i < 1 || i > p.n()) throw Error(ErrorCode::IndexOutOfRange, "arm index " + std::to_string(i));
  return arm_prefix(build_region(p, RegionKind::T), i);
}

}  // namespace hookpair
