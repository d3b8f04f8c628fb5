#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fact/error.hpp"
#include "fact/lattice.hpp"
#include "fact/poset.hpp"
#include "testutil.hpp"

using namespace fact;
using facttest::m3;
using facttest::n5;

TEST_CASE("poset loading closes covers transitively and validates") {
  FinPoset p = FinPoset::from_pairs(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p.cover_pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  CHECK_THROWS_WITH_AS(FinPoset::from_pairs(2, {{0, 1}, {1, 0}}),
                       doctest::Contains("antisymmetric"), Error);
  CHECK_THROWS_AS(FinPoset::from_pairs(2, {{0, 5}}), Error);
  try {
    FinPoset::from_pairs(2, {{0, 5}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FormatError);
    CHECK(std::string(e.what()).find("(0,5)") != std::string::npos);
  }
}

TEST_CASE("build_lattice on the 2-chain") {
  FinPoset p = FinPoset::from_pairs(2, {{0, 1}});
  FinLattice L = build_lattice(p);
  CHECK(L.bot == 0);
  CHECK(L.top == 1);
  CHECK(L.meet_of(0, 1) == 0);
  CHECK(L.join_of(0, 1) == 1);
}

TEST_CASE("build_lattice rejects the bound-free antichain") {
  FinPoset p = FinPoset::from_pairs(2, {});
  try {
    build_lattice(p);
    FAIL("expected NotBounded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotBounded);
  }
}

TEST_CASE("build_lattice rejects glb-free posets") {
  // two bottoms under two tops: bounded fails first, so add global bounds
  // 0 < a,b < c,d < 5 with a,b incomparable and c,d incomparable
  FinPoset p = FinPoset::from_pairs(
      6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  try {
    build_lattice(p);
    FAIL("expected NotALattice");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotALattice);
  }
}

TEST_CASE("M3 meet/join tables match the independent glb/lub scan") {
  FinLattice L = m3();
  CHECK(L.n() == 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      auto g = facttest::oracle_glb(L.poset, i, j);
      auto u = facttest::oracle_lub(L.poset, i, j);
      REQUIRE(g.has_value());
      REQUIRE(u.has_value());
      CHECK(L.meet_of(i, j) == *g);
      CHECK(L.join_of(i, j) == *u);
    }
  // atoms meet at bot, join at top
  CHECK(L.meet_of(1, 2) == L.bot);
  CHECK(L.join_of(1, 2) == L.top);
}

TEST_CASE("modularity: M3 yes, N5 no, Boolean yes") {
  CHECK(is_modular(m3()));
  CHECK_FALSE(is_modular(n5()));
  auto w = modularity_witness(n5());
  REQUIRE(w.has_value());
  auto [a, b, c] = *w;
  FinLattice L = n5();
  CHECK(L.leq(c, b));
  CHECK(L.join_of(c, L.meet_of(a, b)) != L.meet_of(L.join_of(c, a), b));
  for (int k = 0; k <= 4; ++k) CHECK(is_modular(boolean_lattice(k)));
}

TEST_CASE("modular pairs on N5") {
  FinLattice L = n5();
  // ids from the fixture: 1 = x, 2 = z (long side), 3 = y (short side)
  CHECK(modular_pair(L, 2, 3));        // (z,y)M
  CHECK_FALSE(modular_pair(L, 3, 2));  // (y,z)M fails...
  auto c = modular_pair_witness(L, 3, 2);
  REQUIRE(c.has_value());
  CHECK(*c == 1);  // ...witnessed by c = x
  CHECK(dual_modular_pair(L, 3, 2));
  CHECK_FALSE(dual_modular_pair(L, 3, 1));  // (y,x)M* fails
  // (bot, v) is always both
  for (int v = 0; v < L.n(); ++v) {
    CHECK(modular_pair(L, L.bot, v));
    CHECK(dual_modular_pair(L, L.bot, v));
  }
}

TEST_CASE("in a modular lattice every pair is modular and dual modular") {
  for (const FinLattice& L : {m3(), boolean_lattice(3), mo_lattice(2)}) {
    REQUIRE(is_modular(L));
    for (int a = 0; a < L.n(); ++a)
      for (int b = 0; b < L.n(); ++b) {
        CHECK(modular_pair(L, a, b));
        CHECK(dual_modular_pair(L, a, b));
      }
  }
}

namespace {

// independent scan of both symmetry implications, straight from the pair
// predicates
fact::SymmetryClass oracle_symmetry(const FinLattice& L) {
  if (is_modular(L)) return SymmetryClass::Modular;
  bool m = true, ms = true;
  for (int a = 0; a < L.n(); ++a)
    for (int b = 0; b < L.n(); ++b) {
      if (modular_pair(L, a, b) && !modular_pair(L, b, a)) m = false;
      if (dual_modular_pair(L, a, b) && !dual_modular_pair(L, b, a)) ms = false;
    }
  if (m && ms) return SymmetryClass::Symmetric;
  if (m) return SymmetryClass::MSymmetricOnly;
  if (ms) return SymmetryClass::MStarSymmetricOnly;
  return SymmetryClass::None;
}

}  // namespace

TEST_CASE("symmetry classification") {
  CHECK(symmetry_class(m3()) == SymmetryClass::Modular);
  CHECK(symmetry_class(boolean_lattice(3)) == SymmetryClass::Modular);
  CHECK(symmetry_class(n5()) == oracle_symmetry(n5()));
  CHECK(symmetry_class(n5()) == SymmetryClass::None);
}

TEST_CASE("interval_lattice") {
  FinLattice L = m3();
  SUBCASE("identity interval") {
    SubLattice s = interval_lattice(L, L.bot, L.top);
    CHECK(s.lattice.poset == L.poset);
    CHECK(s.lattice.meet == L.meet);
  }
  SUBCASE("degenerate interval") {
    SubLattice s = interval_lattice(L, 2, 2);
    CHECK(s.lattice.n() == 1);
  }
  SUBCASE("interval below an atom is the 2-chain") {
    SubLattice s = interval_lattice(L, L.bot, 1);
    CHECK(s.lattice.n() == 2);
    CHECK(s.to_parent == std::vector<int>{0, 1});
  }
  SUBCASE("bad interval") {
    try {
      interval_lattice(L, 1, 2);
      FAIL("expected BadInterval");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadInterval);
    }
  }
}

TEST_CASE("generators") {
  FinLattice b2 = boolean_lattice(2);
  CHECK(b2.n() == 4);
  int atoms = 0;
  for (int i = 0; i < 4; ++i)
    if (i != b2.bot && b2.meet_of(i, b2.bot) == b2.bot && b2.poset.up.row_count(i) == 2) ++atoms;
  CHECK(atoms == 2);

  FinLattice mo3 = mo_lattice(3);
  CHECK(mo3.n() == 8);
  CHECK(is_modular(mo3));

  CHECK(chain_lattice(3).n() == 4);
  CHECK(is_modular(chain_lattice(5)));

  FinLattice pg22 = subspace_lattice(2, 2);
  CHECK(pg22.n() == 5);  // zero, three lines, the plane
  CHECK(is_modular(pg22));
  CHECK(subspace_lattice(2, 3).n() == 16);
  CHECK(subspace_lattice(3, 2).n() == 6);
  CHECK(subspace_lattice(2, 4).n() == 67);

  try {
    subspace_lattice(7, 4);
    FAIL("expected LimitExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LimitExceeded);
  }
}

TEST_CASE("generated lattices: tables vs independent oracle, intervals stay modular") {
  std::vector<FinLattice> corpus;
  for (int k = 0; k <= 3; ++k) corpus.push_back(boolean_lattice(k));
  for (int k = 0; k <= 3; ++k) corpus.push_back(mo_lattice(k));
  corpus.push_back(chain_lattice(4));
  corpus.push_back(subspace_lattice(2, 2));
  corpus.push_back(subspace_lattice(3, 2));
  corpus.push_back(subspace_lattice(2, 3));
  corpus.push_back(m3());

  for (const FinLattice& L : corpus) {
    for (int i = 0; i < L.n(); ++i)
      for (int j = 0; j < L.n(); ++j) {
        CHECK(L.meet_of(i, j) == facttest::oracle_glb(L.poset, i, j).value());
        CHECK(L.join_of(i, j) == facttest::oracle_lub(L.poset, i, j).value());
      }
    REQUIRE(is_modular(L));
    for (int lo = 0; lo < L.n(); ++lo)
      for (int hi = 0; hi < L.n(); ++hi) {
        if (!L.leq(lo, hi)) continue;
        CHECK(is_modular(interval_lattice(L, lo, hi).lattice));
      }
  }
}
