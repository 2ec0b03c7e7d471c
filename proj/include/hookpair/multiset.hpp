#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "hookpair/cell_set.hpp"
#include "hookpair/error.hpp"

namespace hookpair {

struct ArmLegPair {
  int arm = 0;
  int leg = 0;

  int hook() const noexcept { return arm + leg + 1; }

  friend auto operator<=>(const ArmLegPair&, const ArmLegPair&) = default;

  std::string to_string() const {
    return "(" + std::to_string(arm) + "," + std::to_string(leg) + ")";
  }
};

/// Finite multiset stored as an ordered count map. Keys with multiplicity
/// zero are never stored, so equality of the maps is multiset equality.
template <typename Key>
class Multiset {
 public:
  using key_type = Key;

  Multiset() = default;

  void add(const Key& key, std::size_t times = 1) {
    if (times) counts_[key] += times;
  }

  std::size_t count(const Key& key) const {
    auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
  }

  /// Total multiplicity.
  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (const auto& [key, c] : counts_) total += c;
    return total;
  }

  bool empty() const noexcept { return counts_.empty(); }
  std::size_t distinct() const noexcept { return counts_.size(); }

  auto begin() const noexcept { return counts_.begin(); }
  auto end() const noexcept { return counts_.end(); }

  /// Disjoint union: multiplicities add.
  Multiset& operator+=(const Multiset& other) {
    for (const auto& [key, c] : other.counts_) counts_[key] += c;
    return *this;
  }

  friend Multiset operator+(Multiset a, const Multiset& b) { return a += b; }

  friend bool operator==(const Multiset&, const Multiset&) = default;

  template <typename Fn>
  auto map(Fn&& fn) const {
    Multiset<std::decay_t<decltype(fn(std::declval<const Key&>()))>> out;
    for (const auto& [key, c] : counts_) out.add(fn(key), c);
    return out;
  }

 private:
  std::map<Key, std::size_t> counts_;
};

/// First key (in key order) whose multiplicities differ.
template <typename Key>
struct MultisetDifference {
  Key key{};
  std::size_t left = 0;
  std::size_t right = 0;
};

template <typename Key>
std::optional<MultisetDifference<Key>> first_difference(const Multiset<Key>& a, const Multiset<Key>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      return MultisetDifference<Key>{ia->first, ia->second, 0};
    }
    if (ia == a.end() || ib->first < ia->first) {
      return MultisetDifference<Key>{ib->first, 0, ib->second};
    }
    if (ia->second != ib->second) return MultisetDifference<Key>{ia->first, ia->second, ib->second};
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

using ArmLegMultiset = Multiset<ArmLegPair>;
using IntMultiset = Multiset<int>;

template <typename Key>
bool multiset_eq(const Multiset<Key>& a, const Multiset<Key>& b) {
  return a == b;
}

template <typename Key>
Multiset<Key> multiset_union(const Multiset<Key>& a, const Multiset<Key>& b) {
  return a + b;
}

/// The integers lo..hi, each once; empty when lo > hi.
inline IntMultiset integer_range(int lo, int hi) {
  IntMultiset out;
  for (int v = lo; v <= hi; ++v) out.add(v);
  return out;
}

inline ArmLegPair arm_leg(const CellSet& g, Cell x) { return {g.arm(x), g.leg(x)}; }

/// AL_G(E): the (arm, leg) pairs of the cells of e, measured in g.
inline ArmLegMultiset al_multiset(const CellSet& g, const CellSet& e) {
  if (!e.is_subset_of(g)) throw Error(ErrorCode::NotASubset, "AL_G(E) requires E to be a subset of G");
  ArmLegMultiset out;
  for (const Cell& x : e) out.add(arm_leg(g, x));
  return out;
}

inline ArmLegMultiset al_multiset(const CellSet& g) { return al_multiset(g, g); }

inline IntMultiset hooks(const ArmLegMultiset& al) {
  return al.map([](const ArmLegPair& p) { return p.hook(); });
}

/// H_G(E).
inline IntMultiset hook_multiset(const CellSet& g, const CellSet& e) { return hooks(al_multiset(g, e)); }

inline IntMultiset hook_multiset(const CellSet& g) { return hook_multiset(g, g); }

}  // namespace hookpair
