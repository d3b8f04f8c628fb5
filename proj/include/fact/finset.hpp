#pragma once

#include <vector>

#include "fact/eqrel.hpp"

namespace fact {

/// Map between finite sets {0..dom-1} -> {0..cod-1}.
struct FinMap {
  int dom = 0, cod = 0;
  std::vector<int> image;

  static FinMap identity(int n);
  /// The unique map to the one-element set.
  static FinMap terminal(int n);
  /// Canonical surjection onto the block set, x -> block id.
  static FinMap block_map(const EqRel& r);

  int operator()(int x) const { return image[x]; }
  bool is_surjective() const;
  bool is_bijective() const { return dom == cod && is_surjective(); }
  EqRel kernel() const;

  bool operator==(const FinMap&) const = default;
};

/// g after f. Errors: SizeMismatch when cod(f) != dom(g).
FinMap compose(const FinMap& g, const FinMap& f);
/// x -> (f(x), g(x)) into cod(f) x cod(g), pair index f(x)*cod(g) + g(x).
FinMap pair_map(const FinMap& f, const FinMap& g);
/// Projections of a product carrier of shape c1 x c2.
FinMap proj1(int c1, int c2);
FinMap proj2(int c1, int c2);

struct PushoutResult {
  int size = 0;
  FinMap leg1, leg2;  // from cod(f) and cod(g) into the pushout object
};

/// Quotient of the disjoint union cod(f) + cod(g) by the relation generated
/// by f(a) ~ g(a), classes numbered in first-occurrence order.
/// Errors: SizeMismatch on domain mismatch, EmptySet when any set is empty
/// (the ambient category is non-empty finite sets).
PushoutResult pushout(const FinMap& f, const FinMap& g);

/// Commuting square over the span (f, g): u after f = v after g into corner.
struct PushoutSquare {
  FinMap f, g;  // common domain A
  FinMap u, v;  // cod(f) -> corner, cod(g) -> corner
};

/// True iff the square commutes and the comparison map from the canonical
/// pushout to the corner is a bijection.
bool is_pushout(const PushoutSquare& sq);

}  // namespace fact
