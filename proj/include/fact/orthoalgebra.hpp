#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fact/orthoposet.hpp"
#include "fact/report.hpp"

namespace fact {

/// Partial commutative sum on {0..n-1}, stored as a total table with -1 for
/// undefined. Axioms are verified by check_oa, not assumed.
struct OrthoAlgebra {
  int n = 0;
  int zero = 0, one = 0;
  std::vector<std::int32_t> sum;  // n*n, -1 = undefined

  static OrthoAlgebra empty(int n, int zero, int one) {
    OrthoAlgebra a;
    a.n = n;
    a.zero = zero;
    a.one = one;
    a.sum.assign(static_cast<size_t>(n) * n, -1);
    return a;
  }

  bool defined(int a, int b) const { return sum[static_cast<size_t>(a) * n + b] >= 0; }
  int sum_of(int a, int b) const { return sum[static_cast<size_t>(a) * n + b]; }
  void define(int a, int b, int v) { sum[static_cast<size_t>(a) * n + b] = v; }

  bool operator==(const OrthoAlgebra&) const = default;
};

/// Commutativity, associativity over defined triples (both directions),
/// unique complements, a (+) a defined only for zero, and cancellativity.
Report check_oa(const OrthoAlgebra& a);

/// a (+) b defined iff a <= b', value the least upper bound.
/// Errors: NotAnOmp when check_omp(p) is red.
OrthoAlgebra omp_to_oa(const OrthoPoset& p);

struct InducedPoset {
  OrthoPoset poset;
  bool is_omp = false;  // every defined a (+) b is a least upper bound
  std::vector<std::array<int, 3>> non_least;  // (a, b, a(+)b) counterexamples
};

/// Order a <= b iff some c has a (+) c = b; ocomp is the unique complement.
/// Errors: NotAnOa when check_oa(a) is red.
InducedPoset oa_to_orthoposet(const OrthoAlgebra& a);

struct SubOa {
  OrthoAlgebra oa;
  std::vector<int> to_parent;
  /// true if some b (+) c with b, c in the interval was defined in the parent
  /// with a value outside the interval (the restriction then drops it).
  bool restriction_dropped = false;
};

/// Interval [zero, a]: carrier {b : b (+) c = a for some c}, sum restricted to
/// pairs whose value stays inside, constants zero and a.
SubOa interval_oa(const OrthoAlgebra& a, int elem);

}  // namespace fact
