#pragma once

#include <vector>

#include "fact/decomp.hpp"
#include "fact/eqrel.hpp"
#include "fact/orthoposet.hpp"
#include "fact/report.hpp"

namespace fact {

inline constexpr int kMaxFactorSet = 8;

/// Ordered pair of equivalence relations with trivial meet and total
/// composition; encodes a direct product decomposition of the set.
struct FactorPair {
  EqRel theta1, theta2;

  auto operator<=>(const FactorPair&) const = default;
};

bool is_factor_pair(const EqRel& r, const EqRel& s);

/// All factor pairs over {0..n-1}, ordered by the partition enumeration of
/// both components. Errors: LimitExceeded (bound default 8), UsageError n < 1.
std::vector<FactorPair> factor_pairs(int n, int max_n = kMaxFactorSet);

/// The OMP over the factor pairs: (t1,t2) <= (p1,p2) iff t1 below p1, p2
/// below t2, and every two of the four relations permute; complement swaps.
struct FactOmp {
  OrthoPoset omp;
  std::vector<FactorPair> pairs;

  int index_of(const FactorPair& p) const;  // -1 when absent
};

FactOmp factor_pair_omp(int n, int max_n = kMaxFactorSet);

/// Certificate that the factor-pair OMP and the decomposition algebra of the
/// same set present one structure: the bijection sends [f1,f2] to
/// (ker f2, ker f1) and must preserve bounds, order both ways, complement,
/// and the partial sum (through orthogonal joins on the OMP side).
struct BridgeCertificate {
  Report report;
  FactOmp fact;
  DecompAlgebra alg;
  std::vector<int> to_fact;  // algebra index -> fact index
};

BridgeCertificate factor_decomposition_bridge(int n, int max_n = kMaxFactorSet);

/// Set-level section at a factor pair, transported through the bridge and
/// the categorical section: the interval below p in Fact X must be
/// isomorphic to Fact of a blocks(theta2)-element set via
/// bridge -> gamma -> bridge.
struct SetSection {
  Report report;
  SubOmp interval;
  FactOmp target;            // factor pairs of the quotient set
  std::vector<int> sigma;    // interval carrier -> target carrier
};

SetSection set_section(const BridgeCertificate& bridge, int pair_index);

}  // namespace fact
