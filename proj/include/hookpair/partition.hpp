#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hookpair/error.hpp"

namespace hookpair {

/// A partition n >= a_1 >= ... >= a_k >= 0 of fixed length k.
///
/// Trailing zero parts are significant: they change the geometry of the
/// regions built from the partition (T* depends on the last part).
class Partition {
 public:
  /// Validates and builds a partition. Parts are indexed from 1 in the
  /// accessors below to match the row/column conventions of the diagrams.
  static Partition make(std::vector<int> parts, int k, int n) {
    if (k < 1 || n < 1) {
      throw Error(ErrorCode::InvalidBound,
                  "k and n must be positive (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
    }
    if (static_cast<int>(parts.size()) != k) {
      throw Error(ErrorCode::WrongLength, "expected " + std::to_string(k) + " parts, got " +
                                              std::to_string(parts.size()));
    }
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (parts[j] < 0) {
        throw Error(ErrorCode::NotWeaklyDecreasing,
                    "part " + std::to_string(j + 1) + " is negative");
      }
      if (j > 0 && parts[j] > parts[j - 1]) {
        throw Error(ErrorCode::NotWeaklyDecreasing,
                    "part " + std::to_string(j + 1) + " exceeds part " + std::to_string(j));
      }
    }
    if (parts.front() > n) {
      throw Error(ErrorCode::PartExceedsN, "largest part " + std::to_string(parts.front()) +
                                               " exceeds n=" + std::to_string(n));
    }
    return Partition(std::move(parts), k, n);
  }

  /// Like make(), but pads a shorter part list with trailing zeros.
  static Partition padded(std::vector<int> parts, int k, int n) {
    if (k >= 1 && static_cast<int>(parts.size()) < k) parts.resize(static_cast<std::size_t>(k), 0);
    return make(std::move(parts), k, n);
  }

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }

  /// Part j for 1 <= j <= k; 0 for j > k.
  int part(int j) const {
    if (j < 1) throw Error(ErrorCode::IndexOutOfRange, "part index " + std::to_string(j));
    if (j > k_) return 0;
    return parts_[static_cast<std::size_t>(j - 1)];
  }

  int largest() const noexcept { return parts_.front(); }
  int smallest() const noexcept { return parts_.back(); }

  std::span<const int> parts() const noexcept { return parts_; }

  /// Sum of all parts.
  int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(parts_[j]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Partition(std::vector<int> parts, int k, int n) : parts_(std::move(parts)), k_(k), n_(n) {}

  std::vector<int> parts_;
  int k_ = 0;
  int n_ = 0;
};

/// Conjugate: part j counts the parts of p that are >= j. The result has
/// length p.n() and part bound p.k().
inline Partition conjugate(const Partition& p) {
  std::vector<int> parts(static_cast<std::size_t>(p.n()), 0);
  for (int j = 1; j <= p.n(); ++j) {
    parts[static_cast<std::size_t>(j - 1)] = static_cast<int>(
        std::count_if(p.parts().begin(), p.parts().end(), [j](int a) { return a >= j; }));
  }
  return Partition::make(std::move(parts), p.n(), p.k());
}

/// Calls fn on every partition with k parts bounded by n, in ascending
/// lexicographic order of the part sequence.
template <typename Fn>
void for_each_partition(int k, int n, Fn&& fn) {
  if (k < 1 || n < 1) {
    throw Error(ErrorCode::InvalidBound, "k and n must be positive");
  }
  // Start from all zeros; advance like an odometer whose digits must stay
  // weakly decreasing from left to right.
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  for (;;) {
    fn(Partition::make(parts, k, n));
    // Lexicographic successor: find the rightmost position that can grow.
    int pos = k - 1;
    while (pos >= 0) {
      const int bound = pos == 0 ? n : parts[static_cast<std::size_t>(pos - 1)];
      if (parts[static_cast<std::size_t>(pos)] < bound) break;
      --pos;
    }
    if (pos < 0) return;
    ++parts[static_cast<std::size_t>(pos)];
    std::fill(parts.begin() + pos + 1, parts.end(), 0);
  }
}

inline std::vector<Partition> enumerate_partitions(int k, int n) {
  std::vector<Partition> out;
  for_each_partition(k, n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace hookpair
