#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fact/poset.hpp"

namespace fact {

/// Every lattice predicate here is an exhaustive table scan, so constructions
/// refuse carriers above this size unless the caller raises the limit.
inline constexpr int kMaxLatticeSize = 512;

/// Bounded lattice with total meet/join tables over dense ids.
struct FinLattice {
  FinPoset poset;
  std::vector<int> meet, join;  // n*n, row-major
  int bot = 0, top = 0;

  int n() const { return poset.n; }
  bool leq(int i, int j) const { return poset.leq(i, j); }
  int meet_of(int i, int j) const { return meet[static_cast<size_t>(i) * n() + j]; }
  int join_of(int i, int j) const { return join[static_cast<size_t>(i) * n() + j]; }

  bool operator==(const FinLattice&) const = default;
};

/// Computes meet/join tables and bounds from the order.
/// Errors: NotALattice (pair without glb/lub, named), NotBounded, LimitExceeded.
FinLattice build_lattice(const FinPoset& poset, int max_n = kMaxLatticeSize);

/// c <= b implies c v (a ^ b) = (c v a) ^ b, over all triples.
bool is_modular(const FinLattice& L);

/// Violating triple (a, b, c) if any.
std::optional<std::array<int, 3>> modularity_witness(const FinLattice& L);

/// (a,b)M: c <= b implies c v (a ^ b) = (c v a) ^ b.
bool modular_pair(const FinLattice& L, int a, int b);
/// (a,b)M*: b <= c implies c ^ (a v b) = (c ^ a) v b.
bool dual_modular_pair(const FinLattice& L, int a, int b);

/// Witnessing c for a failed (dual) modular pair, if any.
std::optional<int> modular_pair_witness(const FinLattice& L, int a, int b);
std::optional<int> dual_modular_pair_witness(const FinLattice& L, int a, int b);

enum class SymmetryClass { Modular, Symmetric, MSymmetricOnly, MStarSymmetricOnly, None };

const char* symmetry_class_name(SymmetryClass c);

/// Exhaustively tests modularity and both symmetry implications
/// ((a,b)M => (b,a)M and the dual).
SymmetryClass symmetry_class(const FinLattice& L);

struct SubLattice {
  FinLattice lattice;
  std::vector<int> to_parent;  // sublattice id -> parent id
};

/// Interval [lo, hi] with inherited meet/join. Errors: BadInterval.
SubLattice interval_lattice(const FinLattice& L, int lo, int hi);

// --- generators ---

/// 2^k under subset order.
FinLattice boolean_lattice(int k, int max_n = kMaxLatticeSize);
/// Bot, top, and 2k pairwise incomparable atoms (the 2-chain for k = 0).
FinLattice mo_lattice(int k, int max_n = kMaxLatticeSize);
/// The (k+1)-element chain.
FinLattice chain_lattice(int k, int max_n = kMaxLatticeSize);
/// Subspaces of the d-dimensional vector space over the q-element field,
/// ordered by inclusion. q prime <= 7, d <= 4. Errors: LimitExceeded.
FinLattice subspace_lattice(int q, int d, int max_n = kMaxLatticeSize);

}  // namespace fact
