#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fact/finset.hpp"
#include "fact/orthoalgebra.hpp"
#include "fact/report.hpp"

namespace fact {

inline constexpr int kMaxDecompSet = 8;
/// Exhaustive ternary enumeration stays feasible up to here.
inline constexpr int kMaxExhaustiveHonesty = 9;
inline constexpr int kMaxSampledHonesty = 64;

/// Binary product decomposition of {0..n-1}, represented by its canonical
/// kernel pair: kernels are complete invariants of the projections up to
/// codomain isomorphism. The pair map x -> (block1(x), block2(x)) is a
/// bijection onto the product of the block sets.
struct Decomposition {
  EqRel kernel1, kernel2;

  FinMap f1() const { return FinMap::block_map(kernel1); }
  FinMap f2() const { return FinMap::block_map(kernel2); }
  std::string label() const { return kernel1.rgs() + "/" + kernel2.rgs(); }

  auto operator<=>(const Decomposition&) const = default;
};

/// The pair map is a bijection onto blocks(k1) x blocks(k2).
bool is_product_pair(const EqRel& k1, const EqRel& k2);
bool is_product_triple(const EqRel& k1, const EqRel& k2, const EqRel& k3);

/// The square (f1, f2, terminal, terminal) is a pushout.
bool is_disjoint_product(const Decomposition& d);

/// All canonical binary decompositions, restricted-growth-string pair order.
/// Errors: LimitExceeded.
std::vector<Decomposition> enumerate_decompositions(int n, int max_n = kMaxDecompSet);

/// The orthoalgebra of binary decompositions: d (+) e is defined through a
/// ternary decomposition (c1,c2,c3) with d = [c1,(c2,c3)], e = [c2,(c1,c3)],
/// value [(c1,c2),c3]. The table is filled by enumerating every canonical
/// ternary; conflicting witness values would be recorded, never patched.
struct DecompAlgebra {
  int set_size = 0;
  std::vector<Decomposition> elems;
  OrthoAlgebra oa;  // sum indexes into elems
  long long ternary_count = 0;
  bool witness_value_conflict = false;
  std::vector<long long> conflict_witness;  // (d, e, old value, new value)

  int index_of(const Decomposition& d) const;

 private:
  friend DecompAlgebra decomposition_algebra(int, int);
  std::map<std::pair<std::string, std::string>, int> index_;
};

DecompAlgebra decomposition_algebra(int n, int max_n = kMaxDecompSet);

/// Pairwise sum through the same ternary-search definition.
std::optional<Decomposition> decomp_sum(const DecompAlgebra& alg, const Decomposition& d,
                                        const Decomposition& e);

/// For every ternary product diagram (f1,f2,f3), the square
/// ((f1,f3),(f2,f3),pi2,pi2) must be a pushout; projections must be
/// surjective; every binary product must be disjoint. samples = 0 means
/// exhaustive (needs n <= kMaxExhaustiveHonesty); sampling requires a seed.
Report honesty_check(int n, int samples = 0, std::optional<std::uint64_t> seed = std::nullopt);

/// Instance check of the two product-diagram claims: a binary diagram (p,q)
/// with q bijective forces P to be a point, and a ternary diagram (p,p,q)
/// forces P to be a point and q bijective.
Report claims_check(int n, int max_n = kMaxDecompSet);

/// Same verification applied to an explicit list of candidate ternaries
/// (p, p, q) given by kernel triples; lets tests feed doctored diagrams.
void claims_verify_ternaries(const std::vector<std::array<EqRel, 3>>& triples, Report& r);

/// Section certificate at h = [h1,h2]: the interval below h inside the
/// decomposition algebra of A against the decomposition algebra of
/// H1 = blocks(ker h1), with
///   gamma(d): solve (gamma1,gamma2) o h1 = (f1, g1) pointwise, g the unique
///             summand with d (+) g = h
///   phi([m1,m2]) = [m1 h1, (m2 h1, h2)]
/// checked mutually inverse, sum-preserving, and bound-preserving.
struct CatSection {
  Report report;
  SubOa interval;          // h-down inside alg.oa
  DecompAlgebra base;      // decomposition algebra of H1
  std::vector<int> gamma;  // interval carrier -> base carrier
  std::vector<int> phi;    // base carrier -> interval carrier
};

CatSection cat_section(const DecompAlgebra& alg, int h_index);
/// Overload reusing a prebuilt base algebra (must be on H1's carrier size).
CatSection cat_section(const DecompAlgebra& alg, int h_index, const DecompAlgebra& base);

}  // namespace fact
