#pragma once

#include <vector>

#include "fact/poset.hpp"
#include "fact/report.hpp"

namespace fact {

/// Bounded poset with an orthocomplementation candidate. Construction does
/// not presuppose the axioms; check_orthoposet / check_omp report violations
/// with witnesses instead of throwing.
struct OrthoPoset {
  FinPoset poset;
  std::vector<int> ocomp;
  int bot = 0, top = 0;

  int n() const { return poset.n; }
  bool leq(int i, int j) const { return poset.leq(i, j); }
  int comp(int i) const { return ocomp[i]; }

  bool operator==(const OrthoPoset&) const = default;
};

/// Poset axioms, bounds, period two, order inversion, and the condition that
/// x, x' share only the bounds as common bounds.
Report check_orthoposet(const OrthoPoset& p);

/// check_orthoposet plus the two OMP clauses: orthogonal pairs have least
/// upper bounds, and x <= y implies x (+) (x (+) y')' = y where (+) is the
/// orthogonal join.
Report check_omp(const OrthoPoset& p);

inline bool is_omp(const OrthoPoset& p) { return check_omp(p).all_green(); }

struct SubOmp {
  OrthoPoset omp;
  std::vector<int> to_parent;
};

/// Interval [bot, a] with induced order and b -> a ^ b' orthocomplement.
/// Errors: MissingMeet with the witnessing b when a ^ b' does not exist.
SubOmp interval_omp(const OrthoPoset& p, int a);

// --- generators (small standard orthoposets, used as fixtures and corpora) ---

/// Boolean lattice 2^k with set complement.
OrthoPoset boolean_omp(int k);
/// Bot, top, 2k atoms with atom 2i and 2i+1 complementary.
OrthoPoset mo_omp(int k);

}  // namespace fact
