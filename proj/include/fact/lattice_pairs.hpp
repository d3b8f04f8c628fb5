#pragma once

#include <utility>
#include <vector>

#include "fact/lattice.hpp"
#include "fact/orthoposet.hpp"
#include "fact/report.hpp"

namespace fact {

enum class PairMode { Modular, Symmetric };

const char* pair_mode_name(PairMode m);

/// The OMP of ordered complementary pairs of a bounded lattice, ordered by
/// (x1,x2) <= (y1,y2) iff x1 <= y1 and y2 <= x2, with swap as complement.
/// In Symmetric mode the carrier keeps only pairs (x,y) where (x,y) and (y,x)
/// are modular and dual modular pairs; on a modular lattice this filters
/// nothing.
struct PairOmp {
  OrthoPoset omp;
  std::vector<std::pair<int, int>> pairs;  // carrier labels, lexicographic
  PairMode mode = PairMode::Modular;

  int index_of(int x, int y) const;  // -1 when absent
};

/// Errors: PreconditionFailed when the lattice class does not match the mode
/// (Modular needs a modular lattice, Symmetric a symmetric or modular one).
PairOmp complement_pair_omp(const FinLattice& L, PairMode mode);

/// Certificate for one section: the interval below p = (a,b) inside the pair
/// OMP against the pair OMP of the interval [0,a], with the explicit maps
///   gamma(x,y) = (x, y ^ a)   and   phi(u,v) = (u, v v b)
/// checked to be mutually inverse order- and ortho-isomorphisms.
struct LatticeSection {
  Report report;
  SubOmp interval;           // p-down inside the pair OMP of L
  SubLattice a_down;         // the interval [0,a] of L
  PairOmp base;              // pair OMP of a_down
  std::vector<int> gamma;    // interval carrier -> base carrier (-1 if undefined)
  std::vector<int> phi;      // base carrier -> interval carrier (-1 if undefined)
};

/// Errors: PreconditionFailed when (x,y) is not in the carrier of l2.
LatticeSection lattice_section(const FinLattice& L, const PairOmp& l2, int x, int y);

}  // namespace fact
