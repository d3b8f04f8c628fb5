#pragma once

#include <optional>
#include <vector>

#include "fact/orthoalgebra.hpp"
#include "fact/orthoposet.hpp"

namespace fact {

/// Full backtracking search caps out here unless the caller raises the bound.
inline constexpr int kMaxIsoSearch = 24;

/// True iff map is a bijection preserving order both ways, ocomp, and bounds.
bool is_omp_iso(const OrthoPoset& p, const OrthoPoset& q, const std::vector<int>& map);

/// True iff map is a bijection preserving sum definedness and values both
/// ways, and the constants.
bool is_oa_iso(const OrthoAlgebra& a, const OrthoAlgebra& b, const std::vector<int>& map);

/// First isomorphism in deterministic assignment order (elements sorted by
/// invariant class, candidate images ascending), or nullopt.
/// Errors: SizeLimit when the carrier exceeds max_n.
std::optional<std::vector<int>> omp_iso(const OrthoPoset& p, const OrthoPoset& q,
                                        int max_n = kMaxIsoSearch);
std::optional<std::vector<int>> oa_iso(const OrthoAlgebra& a, const OrthoAlgebra& b,
                                       int max_n = kMaxIsoSearch);

}  // namespace fact
