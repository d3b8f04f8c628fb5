#pragma once

#include <vector>

#include "fact/orthoposet.hpp"
#include "fact/report.hpp"
#include "fact/ring.hpp"

namespace fact {

/// All x with x*x = x, ascending.
std::vector<int> idempotents(const FinRing& r);

/// The idempotent OMP E(R): e <= f iff ef = e = fe, e' = 1 - e.
struct RingOmp {
  OrthoPoset omp;
  std::vector<int> elements;  // carrier labels (ring element ids), ascending

  int index_of(int ring_elem) const;  // -1 when not idempotent
};

RingOmp idempotent_omp(const FinRing& r);

struct CornerRing {
  FinRing ring;
  std::vector<int> to_parent;  // corner id -> ring element
};

/// R_e = {x : ex = x = xe} with unit e. Errors: NotIdempotent.
CornerRing corner_ring(const FinRing& r, int e);

/// Certificate that the interval below e in E(R) is literally E(R_e):
/// carriers equal as element sets, orders coincide, and the interval
/// orthocomplement equals e - f (and (1-f)e) for every f <= e. The interval
/// complement is evaluated through the lattice meet e ^ f' when it exists
/// and through the unique OA summand otherwise; both routes are compared
/// whenever both evaluate.
struct RingSection {
  Report report;
  CornerRing corner;
  RingOmp parent;       // E(R)
  RingOmp corner_omp;   // E(R_e), elements in corner ids
};

RingSection ring_section(const FinRing& r, int e);

}  // namespace fact
