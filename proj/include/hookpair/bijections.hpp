#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hookpair/cell_set.hpp"
#include "hookpair/dyck.hpp"
#include "hookpair/error.hpp"
#include "hookpair/multiset.hpp"
#include "hookpair/partition.hpp"
#include "hookpair/regions.hpp"

namespace hookpair {

/// 180-degree rotation carrying T onto T* in absolute coordinates.
inline Cell rot_T(const Partition& p, Cell x) {
  if (!build_region(p, RegionKind::T).contains(x)) throw Error(ErrorCode::CellNotInT, x.to_string());
  return {p.k() + 1 - x.row, p.n() + p.largest() - p.smallest() + 1 - x.col};
}

/// 180-degree rotation carrying T_(i) onto (T*)_(i). This is rot_T moved
/// n-i columns to the right; the two agree only for i == n.
inline Cell rotate_prefix(const Partition& p, int i, Cell x) {
  if (i < 1 || i > p.n()) throw Error(ErrorCode::IndexOutOfRange, "arm index " + std::to_string(i));
  const Cell r = rot_T(p, x);
  return {r.row, r.col + p.n() - i};
}

struct MapEntry {
  Cell from;
  Cell to;
  RegionKind target = RegionKind::R;

  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

/// A finite cell map, entries sorted by source cell.
class CellMap {
 public:
  CellMap(RegionKind source, std::vector<MapEntry> entries) : source_(source), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const MapEntry& a, const MapEntry& b) { return a.from < b.from; });
  }

  RegionKind source() const noexcept { return source_; }
  const std::vector<MapEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::optional<MapEntry> find(Cell from) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), from,
                               [](const MapEntry& e, Cell c) { return e.from < c; });
    if (it == entries_.end() || it->from != from) return std::nullopt;
    return *it;
  }

  Cell at(Cell from) const {
    auto e = find(from);
    if (!e) throw Error(ErrorCode::CellNotInSet, "no map entry for " + from.to_string());
    return e->to;
  }

  /// Image cells carrying the given target tag.
  CellSet image(RegionKind target) const {
    std::vector<Cell> out;
    for (const auto& e : entries_) {
      if (e.target == target) out.push_back(e.to);
    }
    return CellSet(std::move(out));
  }

 private:
  RegionKind source_;
  std::vector<MapEntry> entries_;
};

/// phi: T -> T*. For each i the up/down pairing of rho_i sends the cell
/// labelled x_j to the rotated image of the cell labelled z_{P_i(j)}.
inline CellMap phi(const Partition& p) {
  std::vector<MapEntry> entries;
  for (int i = 1; i <= p.n(); ++i) {
    const LabelSet labels = label_cells(p, i);
    const Pairing pairing = pair_updown(build_dyck(build_sigma(p, i)));
    for (int j = 1; j <= p.k(); ++j) {
      const Cell z = labels.z[static_cast<std::size_t>(pairing(j) - 1)].cell;
      entries.push_back({labels.x[static_cast<std::size_t>(j - 1)].cell, rotate_prefix(p, i, z), RegionKind::Tstar});
    }
  }
  return CellMap(RegionKind::T, std::move(entries));
}

namespace detail {

// Pairs the t-th cell from the top of the j-th occupied column (from the left)
// of src with the same position in dst.
inline std::vector<MapEntry> match_columns_from_top(const CellSet& src, const CellSet& dst, RegionKind target) {
  std::vector<MapEntry> out;
  if (src.empty() || dst.empty()) return out;
  for (int j = 0; src.min_col() + j <= src.max_col(); ++j) {
    auto a = src.column(src.min_col() + j);
    auto b = dst.column(dst.min_col() + j);
    std::reverse(a.begin(), a.end());
    std::reverse(b.begin(), b.end());
    for (std::size_t t = 0; t < std::min(a.size(), b.size()); ++t) out.push_back({a[t], b[t], target});
  }
  return out;
}

// Pairs the t-th cell from the left of row i of src with the same position
// in row i of dst.
inline std::vector<MapEntry> match_rows_from_left(const CellSet& src, const CellSet& dst, RegionKind target) {
  std::vector<MapEntry> out;
  for (const auto& r : src.rows()) {
    const auto a = src.row(r.row);
    const auto b = dst.row(r.row);
    for (std::size_t t = 0; t < std::min(a.size(), b.size()); ++t) out.push_back({a[t], b[t], target});
  }
  return out;
}

}  // namespace detail

/// zeta_1: V -> R1, zeta_2: T1* -> R2, zeta_3: T2* -> D.
inline CellMap zeta(const Partition& p, int which) {
  switch (which) {
    case 1:
      return CellMap(RegionKind::V, detail::match_columns_from_top(build_region(p, RegionKind::V),
                                                                  build_region(p, RegionKind::R1), RegionKind::R1));
    case 2:
      return CellMap(RegionKind::T1star,
                     detail::match_rows_from_left(build_region(p, RegionKind::T1star),
                                                  build_region(p, RegionKind::R2), RegionKind::R2));
    case 3: {
      std::vector<MapEntry> entries;
      const int shift = p.n() - p.smallest();
      for (const Cell& x : build_region(p, RegionKind::T2star)) {
        entries.push_back({x, {x.row, x.col - shift}, RegionKind::D});
      }
      return CellMap(RegionKind::T2star, std::move(entries));
    }
    default:
      throw Error(ErrorCode::IndexOutOfRange, "zeta index " + std::to_string(which));
  }
}

/// psi: SQ -> R disjoint-union D. V goes through zeta_1; T goes through phi
/// and then zeta_2 or zeta_3 depending on which half of T* it lands in.
inline CellMap psi(const Partition& p) {
  const CellMap z1 = zeta(p, 1);
  const CellMap z2 = zeta(p, 2);
  const CellMap z3 = zeta(p, 3);
  const CellSet t1star = build_region(p, RegionKind::T1star);

  std::vector<MapEntry> entries;
  for (const auto& e : z1) entries.push_back({e.from, e.to, RegionKind::R});
  for (const auto& e : phi(p)) {
    if (t1star.contains(e.to)) {
      entries.push_back({e.from, z2.at(e.to), RegionKind::R});
    } else {
      entries.push_back({e.from, z3.at(e.to), RegionKind::D});
    }
  }
  return CellMap(RegionKind::SQ, std::move(entries));
}

enum class Statistic { ArmLeg, Hook };

/// One possible codomain of a map: the tag used in the entries, the cells
/// the tagged images must cover, and the diagram in which their statistics
/// are measured.
struct TargetRegion {
  RegionKind tag;
  CellSet cells;
  CellSet ambient;
};

struct CertificateRecord {
  Cell from;
  Cell to;
  RegionKind target = RegionKind::R;
  ArmLegPair source_al;
  ArmLegPair target_al;
  bool ok = false;
};

/// Per-cell evidence that a map is a statistic-preserving bijection.
struct BijectionCertificate {
  RegionKind source = RegionKind::T;
  Statistic statistic = Statistic::ArmLeg;
  std::vector<CertificateRecord> records;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

inline BijectionCertificate certify(const CellMap& map, const CellSet& domain, const CellSet& source_ambient,
                                    const std::vector<TargetRegion>& targets, Statistic stat) {
  BijectionCertificate cert;
  cert.source = map.source();
  cert.statistic = stat;

  std::vector<Cell> sources;
  for (const auto& e : map) sources.push_back(e.from);
  if (CellSet(sources) != domain || sources.size() != domain.size()) {
    cert.failures.push_back("map domain differs from the source region");
  }

  for (const auto& e : map) {
    CertificateRecord rec{e.from, e.to, e.target, {}, {}, false};
    auto tr = std::find_if(targets.begin(), targets.end(), [&](const TargetRegion& t) { return t.tag == e.target; });
    if (!source_ambient.contains(e.from)) {
      cert.failures.push_back("source cell " + e.from.to_string() + " outside the source diagram");
    } else if (tr == targets.end() || !tr->cells.contains(e.to)) {
      cert.failures.push_back("image " + e.to.to_string() + " of " + e.from.to_string() + " outside target " +
                              std::string(to_string(e.target)));
    } else {
      rec.source_al = arm_leg(source_ambient, e.from);
      rec.target_al = arm_leg(tr->ambient, e.to);
      rec.ok = stat == Statistic::ArmLeg ? rec.source_al == rec.target_al
                                         : rec.source_al.hook() == rec.target_al.hook();
      if (!rec.ok) {
        cert.failures.push_back("statistic mismatch at " + e.from.to_string() + " -> " + e.to.to_string() + ": " +
                                rec.source_al.to_string() + " vs " + rec.target_al.to_string());
      }
    }
    cert.records.push_back(rec);
  }

  for (const auto& t : targets) {
    const CellSet img = map.image(t.tag);
    std::size_t tagged = 0;
    for (const auto& e : map) tagged += e.target == t.tag;
    if (tagged != img.size()) {
      cert.failures.push_back("map is not injective into " + std::string(to_string(t.tag)));
    }
    if (img != t.cells) {
      cert.failures.push_back("map does not cover target " + std::string(to_string(t.tag)));
    }
  }
  return cert;
}

inline BijectionCertificate certify_phi(const Partition& p) {
  const CellSet t = build_region(p, RegionKind::T);
  const CellSet ts = build_region(p, RegionKind::Tstar);
  return certify(phi(p), t, t, {{RegionKind::Tstar, ts, ts}}, Statistic::ArmLeg);
}

inline BijectionCertificate certify_psi(const Partition& p, Statistic stat = Statistic::ArmLeg) {
  const CellSet sq = build_region(p, RegionKind::SQ);
  const CellSet r = build_region(p, RegionKind::R);
  const CellSet d = build_region(p, RegionKind::D);
  return certify(psi(p), sq, sq, {{RegionKind::R, r, r}, {RegionKind::D, d, d}}, stat);
}

/// Certificate for a single zeta map with statistics measured in the
/// ambient diagrams the identity refers to (SQ/R, T*/R, T*/D).
inline BijectionCertificate certify_zeta(const Partition& p, int which) {
  const CellMap m = zeta(p, which);
  switch (which) {
    case 1:
      return certify(m, build_region(p, RegionKind::V), build_region(p, RegionKind::SQ),
                     {{RegionKind::R1, build_region(p, RegionKind::R1), build_region(p, RegionKind::R)}},
                     Statistic::ArmLeg);
    case 2:
      return certify(m, build_region(p, RegionKind::T1star), build_region(p, RegionKind::Tstar),
                     {{RegionKind::R2, build_region(p, RegionKind::R2), build_region(p, RegionKind::R)}},
                     Statistic::ArmLeg);
    default:
      return certify(m, build_region(p, RegionKind::T2star), build_region(p, RegionKind::Tstar),
                     {{RegionKind::D, build_region(p, RegionKind::D), build_region(p, RegionKind::D)}},
                     Statistic::ArmLeg);
  }
}

/// Outcome of checking one of the three identities for one partition:
///   1: H(SQ) = H(R) + H(D)      certificate: psi, compared on hooks
///   2: AL(SQ) = AL(R) + AL(D)   certificate: psi
///   3: AL(T) = AL(T*)           certificate: phi
struct TheoremReport {
  int theorem = 0;
  Partition partition;
  ArmLegMultiset al_lhs, al_rhs;  // theorems 2 and 3
  IntMultiset hook_lhs, hook_rhs;  // theorem 1
  bool oracle_equal = false;
  std::optional<std::string> oracle_difference;
  BijectionCertificate certificate;

  bool passed() const noexcept { return oracle_equal && certificate.passed(); }

  /// First reason for failure, empty when passed.
  std::string failure() const {
    if (oracle_difference) return *oracle_difference;
    if (!certificate.failures.empty()) return certificate.failures.front();
    return {};
  }
};

namespace detail {

template <typename Key>
std::optional<std::string> describe_difference(const Multiset<Key>& a, const Multiset<Key>& b) {
  auto d = first_difference(a, b);
  if (!d) return std::nullopt;
  std::string key;
  if constexpr (std::is_same_v<Key, int>) {
    key = std::to_string(d->key);
  } else {
    key = d->key.to_string();
  }
  return "multiplicity of " + key + " is " + std::to_string(d->left) + " on the left, " +
         std::to_string(d->right) + " on the right";
}

}  // namespace detail

inline TheoremReport verify_theorem(const Partition& p, int which) {
  TheoremReport rep{which, p, {}, {}, {}, {}, false, std::nullopt, {}};
  switch (which) {
    case 1: {
      rep.hook_lhs = hook_multiset(build_region(p, RegionKind::SQ));
      rep.hook_rhs = hook_multiset(build_region(p, RegionKind::R)) + hook_multiset(build_region(p, RegionKind::D));
      rep.oracle_difference = detail::describe_difference(rep.hook_lhs, rep.hook_rhs);
      rep.certificate = certify_psi(p, Statistic::Hook);
      break;
    }
    case 2: {
      rep.al_lhs = al_multiset(build_region(p, RegionKind::SQ));
      rep.al_rhs = al_multiset(build_region(p, RegionKind::R)) + al_multiset(build_region(p, RegionKind::D));
      rep.oracle_difference = detail::describe_difference(rep.al_lhs, rep.al_rhs);
      rep.certificate = certify_psi(p, Statistic::ArmLeg);
      break;
    }
    case 3: {
      rep.al_lhs = al_multiset(build_region(p, RegionKind::T));
      rep.al_rhs = al_multiset(build_region(p, RegionKind::Tstar));
      rep.oracle_difference = detail::describe_difference(rep.al_lhs, rep.al_rhs);
      rep.certificate = certify_phi(p);
      break;
    }
    default:
      throw Error(ErrorCode::IndexOutOfRange, "theorem must be 1, 2 or 3, got " + std::to_string(which));
  }
  rep.oracle_equal = !rep.oracle_difference.has_value();
  return rep;
}

/// verify_theorem, raising CounterexampleFound on failure.
inline TheoremReport check_theorem(const Partition& p, int which) {
  TheoremReport rep = verify_theorem(p, which);
  if (!rep.passed()) {
    throw Error(ErrorCode::CounterexampleFound,
                "theorem " + std::to_string(which) + " fails for " + p.to_string() + ": " + rep.failure());
  }
  return rep;
}

}  // namespace hookpair
