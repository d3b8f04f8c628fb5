#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fact/bitrows.hpp"

namespace fact {

/// Finite poset on {0..n-1}; up.get(i,j) holds iff i <= j.
struct FinPoset {
  int n = 0;
  BitRows up;

  FinPoset() = default;
  explicit FinPoset(int n_) : n(n_), up(n_, n_) {
    for (int i = 0; i < n_; ++i) up.set(i, i);
  }

  /// Reflexive-transitively closes the given i<=j pairs, then validates
  /// antisymmetry. Both cover lists and full order lists load this way.
  static FinPoset from_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs);

  bool leq(int i, int j) const { return up.get(i, j); }

  /// Throws Errc::FormatError naming the offending pair.
  void validate() const;

  std::optional<int> minimum() const;
  std::optional<int> maximum() const;

  /// Greatest lower / least upper bound from the order matrix alone.
  /// Absence is a fact (nullopt), not an error.
  std::optional<int> glb(int i, int j) const;
  std::optional<int> lub(int i, int j) const;

  /// Covering pairs (i covered by j), for compact serialization.
  std::vector<std::pair<int, int>> cover_pairs() const;

  bool operator==(const FinPoset&) const = default;
};

}  // namespace fact
