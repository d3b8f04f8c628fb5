#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fact/error.hpp"
#include "fact/iso.hpp"
#include "fact/lattice_pairs.hpp"
#include "fact/orthoalgebra.hpp"
#include "testutil.hpp"

using namespace fact;
using facttest::m3;
using facttest::n5;

TEST_CASE("pair OMP of the Boolean square") {
  PairOmp l2 = complement_pair_omp(boolean_lattice(2), PairMode::Modular);
  CHECK(l2.pairs.size() == 4);  // (0,3),(3,0) and the two atom pairs
  CHECK(check_omp(l2.omp).all_green());
  CHECK(omp_iso(l2.omp, boolean_omp(2)).has_value());
}

TEST_CASE("pair OMP of M3 has eight elements") {
  PairOmp l2 = complement_pair_omp(m3(), PairMode::Modular);
  CHECK(l2.pairs.size() == 8);
  CHECK(check_omp(l2.omp).all_green());
  // six ordered atom pairs plus the two trivial pairs
  int atom_pairs = 0;
  for (auto [x, y] : l2.pairs)
    if (x != 0 && x != 4 && y != 0 && y != 4) ++atom_pairs;
  CHECK(atom_pairs == 6);
}

TEST_CASE("pair OMP of a chain is trivial") {
  PairOmp l2 = complement_pair_omp(chain_lattice(2), PairMode::Modular);
  REQUIRE(l2.pairs.size() == 2);
  CHECK(l2.pairs[0] == std::pair<int, int>{0, 2});
  CHECK(l2.pairs[1] == std::pair<int, int>{2, 0});
  CHECK(check_omp(l2.omp).all_green());
}

TEST_CASE("modular mode rejects N5") {
  try {
    complement_pair_omp(n5(), PairMode::Modular);
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionFailed);
  }
  try {
    complement_pair_omp(n5(), PairMode::Symmetric);
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionFailed);
  }
}

TEST_CASE("symmetric mode equals modular mode on modular lattices") {
  for (const FinLattice& L :
       {boolean_lattice(3), mo_lattice(2), m3(), subspace_lattice(2, 2), subspace_lattice(3, 2)}) {
    PairOmp a = complement_pair_omp(L, PairMode::Modular);
    PairOmp b = complement_pair_omp(L, PairMode::Symmetric);
    CHECK(a.pairs == b.pairs);
    CHECK(a.omp == b.omp);
  }
}

TEST_CASE("sections at the bounds") {
  FinLattice L = m3();
  PairOmp l2 = complement_pair_omp(L, PairMode::Modular);
  SUBCASE("p = (top,bot): the interval is everything") {
    LatticeSection s = lattice_section(L, l2, L.top, L.bot);
    CHECK(s.report.all_green());
    CHECK(s.interval.to_parent.size() == l2.pairs.size());
    CHECK(s.base.pairs.size() == l2.pairs.size());
  }
  SUBCASE("p = (bot,top): both sides a point") {
    LatticeSection s = lattice_section(L, l2, L.bot, L.top);
    CHECK(s.report.all_green());
    CHECK(s.interval.to_parent.size() == 1);
    CHECK(s.base.pairs.size() == 1);
  }
  SUBCASE("atom pair on M3") {
    LatticeSection s = lattice_section(L, l2, 1, 2);
    CHECK(s.report.all_green());
    CHECK(s.interval.to_parent.size() == 2);
    CHECK(s.base.pairs.size() == 2);
  }
  SUBCASE("pair not in carrier") {
    try {
      lattice_section(L, l2, 1, 1);
      FAIL("expected PreconditionFailed");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PreconditionFailed);
    }
  }
}

TEST_CASE("sections are all green over a modular corpus, and gamma is an iso the search confirms") {
  std::vector<FinLattice> corpus = {boolean_lattice(2), boolean_lattice(3), mo_lattice(2),
                                    m3(),               subspace_lattice(2, 2)};
  for (const FinLattice& L : corpus) {
    PairOmp l2 = complement_pair_omp(L, PairMode::Modular);
    REQUIRE(check_omp(l2.omp).all_green());
    for (auto [a, b] : l2.pairs) {
      LatticeSection s = lattice_section(L, l2, a, b);
      CHECK(s.report.all_green());
      // the certificate bijection is itself an OMP isomorphism...
      CHECK(is_omp_iso(s.interval.omp, s.base.omp, s.gamma));
      // ...and the generic search also finds one
      if (s.interval.omp.n() <= kMaxIsoSearch)
        CHECK(omp_iso(s.interval.omp, s.base.omp).has_value());
    }
  }
}

TEST_CASE("symmetric-mode sections on a modular lattice agree with modular-mode sections") {
  FinLattice L = subspace_lattice(2, 2);
  PairOmp l2m = complement_pair_omp(L, PairMode::Modular);
  PairOmp l2s = complement_pair_omp(L, PairMode::Symmetric);
  for (auto [a, b] : l2m.pairs) {
    LatticeSection sm = lattice_section(L, l2m, a, b);
    LatticeSection ss = lattice_section(L, l2s, a, b);
    CHECK(sm.report.all_green());
    CHECK(ss.report.all_green());
    CHECK(sm.gamma == ss.gamma);
  }
}
