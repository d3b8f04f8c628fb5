#pragma once

#include <optional>
#include <vector>

#include "fact/lattice.hpp"
#include "fact/orthoalgebra.hpp"
#include "fact/orthoposet.hpp"
#include "fact/poset.hpp"

namespace facttest {

// N5 pentagon: 0 = bot, 1 = x, 2 = z, 3 = y, 4 = top, with 0 < x < z < 1
// on the long side and y alone on the short side.
inline fact::FinLattice n5() {
  fact::FinPoset p = fact::FinPoset::from_pairs(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  return fact::build_lattice(p);
}

// M3 diamond: bot, three atoms, top.
inline fact::FinLattice m3() {
  fact::FinPoset p =
      fact::FinPoset::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  return fact::build_lattice(p);
}

// Benzene ring O6: 0 < a < b' < 1 and 0 < b < a' < 1.
// ids: 0 = bot, 1 = a, 2 = b, 3 = b', 4 = a', 5 = top.
inline fact::OrthoPoset hexagon_omp_candidate() {
  fact::OrthoPoset p;
  p.poset = fact::FinPoset::from_pairs(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}});
  p.ocomp = {5, 4, 3, 2, 1, 0};
  p.bot = 0;
  p.top = 5;
  return p;
}

// Wright triangle: three 3-atom blocks pasted in a loop of order three.
// Blocks {a,b,c}, {c,d,e}, {e,f,a}; the shared atoms identify the coatoms
// a' = (b+c) = (e+f), c' = (a+b) = (d+e), e' = (c+d) = (f+a).
// ids: 0 bot, 1 top, atoms a..f = 2..7, coatoms a'..f' = 8..13.
inline fact::OrthoAlgebra wright_triangle_oa() {
  using fact::OrthoAlgebra;
  OrthoAlgebra oa = OrthoAlgebra::empty(14, 0, 1);
  auto comp = [](int x) { return x == 0 ? 1 : x == 1 ? 0 : (x < 8 ? x + 6 : x - 6); };
  const int blocks[3][3] = {{2, 3, 4}, {4, 5, 6}, {6, 7, 2}};
  for (auto& blk : blocks) {
    int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& pr : perm) {
      int x = blk[pr[0]], y = blk[pr[1]], z = blk[pr[2]];
      oa.define(x, y, comp(z));       // atom + atom = third atom's complement
      oa.define(x, comp(x), 1);       // atom + its complement
      oa.define(comp(z), z, 1);       // coatom + completing atom
      oa.define(z, comp(z), 1);
    }
  }
  for (int e = 0; e < 14; ++e) {
    oa.define(0, e, e);
    oa.define(e, 0, e);
  }
  return oa;
}

// independent glb/lub: literal scan over all elements from the raw order
inline std::optional<int> oracle_glb(const fact::FinPoset& p, int i, int j) {
  std::vector<int> lb;
  for (int z = 0; z < p.n; ++z)
    if (p.leq(z, i) && p.leq(z, j)) lb.push_back(z);
  for (int g : lb) {
    bool top_of_lb = true;
    for (int z : lb)
      if (!p.leq(z, g)) top_of_lb = false;
    if (top_of_lb) return g;
  }
  return std::nullopt;
}

inline std::optional<int> oracle_lub(const fact::FinPoset& p, int i, int j) {
  std::vector<int> ub;
  for (int z = 0; z < p.n; ++z)
    if (p.leq(i, z) && p.leq(j, z)) ub.push_back(z);
  for (int l : ub) {
    bool bottom_of_ub = true;
    for (int z : ub)
      if (!p.leq(l, z)) bottom_of_ub = false;
    if (bottom_of_ub) return l;
  }
  return std::nullopt;
}

}  // namespace facttest
