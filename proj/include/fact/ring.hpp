#pragma once

#include <vector>

#include "fact/report.hpp"

namespace fact {

inline constexpr int kMaxRingSize = 512;

/// Finite ring with unit, as total addition/multiplication tables.
struct FinRing {
  int n = 0;
  std::vector<int> add, mul;  // n*n, row-major
  int zero = 0, one = 0;
  std::vector<int> neg;

  int add_of(int a, int b) const { return add[static_cast<size_t>(a) * n + b]; }
  int mul_of(int a, int b) const { return mul[static_cast<size_t>(a) * n + b]; }
  int neg_of(int a) const { return neg[a]; }
  int sub(int a, int b) const { return add_of(a, neg[b]); }

  /// Abelian group, associativity, distributivity, two-sided unit.
  /// Throws Errc::FormatError naming the violating tuple.
  void validate() const;

  bool operator==(const FinRing&) const = default;
};

/// Derives neg from the addition table (unique inverse per element, else
/// FormatError) and validates.
FinRing make_ring(int n, std::vector<int> add, std::vector<int> mul, int zero, int one);

/// Z/nZ.
FinRing zn_ring(int n, int max_n = kMaxRingSize);

/// Componentwise product; element id is the mixed-radix tuple index.
FinRing product_ring(const std::vector<FinRing>& factors, int max_n = kMaxRingSize);

/// k x k matrices over GF(q), q prime <= 7, flattened row-major index.
FinRing matrix_ring(int k, int q, int max_n = kMaxRingSize);

}  // namespace fact
