#pragma once

#include <string>
#include <vector>

#include "fact/bitrows.hpp"

namespace fact {

/// Set partitions of {0..n-1} enumerate through restricted growth strings;
/// Bell(10) is the last desk-scale count, so that is the default ceiling.
inline constexpr int kMaxPartitionSet = 10;

/// Partition of {0..n-1} in canonical form: block ids appear in
/// first-occurrence order (a restricted growth string).
struct EqRel {
  int n = 0;
  std::vector<int> block_of;
  int blocks = 0;

  static EqRel delta(int n);  // all singletons
  static EqRel nabla(int n);  // one block

  /// Canonicalizes an arbitrary block labelling.
  static EqRel from_labels(const std::vector<int>& labels);

  bool related(int x, int y) const { return block_of[x] == block_of[y]; }
  bool is_delta() const { return blocks == n; }
  bool is_nabla() const { return blocks == 1 || n == 0; }

  /// this refines coarser, i.e. this is a subset of coarser as a relation.
  bool refines(const EqRel& coarser) const;

  /// "0102"-style restricted growth string; doubles as a canonical key.
  std::string rgs() const;

  auto operator<=>(const EqRel&) const = default;
};

/// Binary relation on {0..n-1}; compositions of equivalences land here.
struct BinRel {
  int n = 0;
  BitRows rel;

  bool is_nabla() const;
  bool operator==(const BinRel&) const = default;
};

/// Common refinement. Errors: SizeMismatch.
EqRel rel_meet(const EqRel& r, const EqRel& s);
/// Transitive closure of the union. Errors: SizeMismatch.
EqRel rel_join(const EqRel& r, const EqRel& s);
/// {(x,z) : exists y with x r y and y s z}. Errors: SizeMismatch.
BinRel rel_compose(const EqRel& r, const EqRel& s);
/// r o s = s o r; the composition is then the join.
bool rel_permute(const EqRel& r, const EqRel& s);
bool compose_is_nabla(const EqRel& r, const EqRel& s);

/// All partitions of {0..n-1}, restricted-growth-string order.
/// Errors: LimitExceeded.
std::vector<EqRel> all_partitions(int n, int max_n = kMaxPartitionSet);

}  // namespace fact
