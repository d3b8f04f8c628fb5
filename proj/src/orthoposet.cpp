#include "fact/orthoposet.hpp"

#include <string>

#include "fact/error.hpp"

namespace fact {

namespace {

void check_poset_axioms(const OrthoPoset& p, Report& r) {
  const FinPoset& P = p.poset;
  const int n = P.n;
  r.pass("reflexive");
  r.pass("antisymmetric");
  r.pass("transitive");
  r.pass("bounded");
  for (int i = 0; i < n; ++i)
    if (!P.leq(i, i)) r.fail("reflexive", {i});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (P.leq(i, j) && P.leq(j, i)) r.fail("antisymmetric", {i, j});
  for (int i = 0; i < n; ++i)
    P.up.for_each_in_row(i, [&](int j) {
      if (!P.up.row_subset(j, i)) {
        // find a concrete k for the witness
        P.up.for_each_in_row(j, [&](int k) {
          if (!P.leq(i, k)) r.fail("transitive", {i, j, k});
        });
      }
    });
  for (int i = 0; i < n; ++i) {
    if (!P.leq(p.bot, i)) r.fail("bounded", {p.bot, i}, "bot not below element");
    if (!P.leq(i, p.top)) r.fail("bounded", {i, p.top}, "element not below top");
  }
}

void check_ortho_axioms(const OrthoPoset& p, Report& r) {
  const int n = p.n();
  r.pass("period_two");
  r.pass("order_inverting");
  r.pass("only_common_bounds");
  for (int x = 0; x < n; ++x) {
    if (p.ocomp[x] < 0 || p.ocomp[x] >= n) {
      r.fail("period_two", {x, p.ocomp[x]}, "complement out of range");
      return;
    }
  }
  for (int x = 0; x < n; ++x)
    if (p.comp(p.comp(x)) != x) r.fail("period_two", {x, p.comp(x), p.comp(p.comp(x))});
  for (int x = 0; x < n; ++x)
    p.poset.up.for_each_in_row(x, [&](int y) {
      if (!p.leq(p.comp(y), p.comp(x))) r.fail("order_inverting", {x, y});
    });
  BitRows down = p.poset.up.transpose();
  std::vector<std::uint64_t> buf(down.words());
  for (int x = 0; x < n; ++x) {
    row_and(down.row(x), down.row(p.comp(x)), down.words(), buf.data());
    buf_for_each(buf.data(), down.words(), [&](int z) {
      if (z != p.bot) r.fail("only_common_bounds", {x, z}, "shared lower bound above bot");
    });
    row_and(p.poset.up.row(x), p.poset.up.row(p.comp(x)), down.words(), buf.data());
    buf_for_each(buf.data(), down.words(), [&](int z) {
      if (z != p.top) r.fail("only_common_bounds", {x, z}, "shared upper bound below top");
    });
  }
}

}  // namespace

Report check_orthoposet(const OrthoPoset& p) {
  Report r("orthoposet(n=" + std::to_string(p.n()) + ")");
  check_poset_axioms(p, r);
  check_ortho_axioms(p, r);
  r.stat("n", p.n());
  return r;
}

Report check_omp(const OrthoPoset& p) {
  Report r("omp(n=" + std::to_string(p.n()) + ")");
  check_poset_axioms(p, r);
  check_ortho_axioms(p, r);
  r.pass("orthogonal_join_exists");
  r.pass("orthomodular_law");

  const int n = p.n();
  const int words = p.poset.up.words();
  std::vector<std::uint64_t> buf(words);
  // least upper bound via the packed order rows; -1 when absent
  auto lub = [&](int x, int y) -> int {
    row_and(p.poset.up.row(x), p.poset.up.row(y), words, buf.data());
    int least = -1;
    buf_for_each(buf.data(), words, [&](int u) {
      if (least >= 0) return;
      if (buf_subset(buf.data(), p.poset.up.row(u), words)) least = u;
    });
    return least;
  };

  for (int x = 0; x < n; ++x) {
    // orthogonal pairs: x <= y', i.e. y = (some upper bound of x)'
    p.poset.up.for_each_in_row(x, [&](int yc) {
      int y = p.comp(yc);
      if (lub(x, y) < 0) r.fail("orthogonal_join_exists", {x, y}, "orthogonal pair without lub");
    });
  }
  for (int x = 0; x < n; ++x) {
    p.poset.up.for_each_in_row(x, [&](int y) {
      int z = lub(x, p.comp(y));  // x (+) y', orthogonal because x <= y = y''
      if (z < 0) {
        r.fail("orthomodular_law", {x, y}, "x (+) y' undefined");
        return;
      }
      int w = lub(x, p.comp(z));  // x (+) z', orthogonal because x <= z
      if (w < 0) {
        r.fail("orthomodular_law", {x, y, z}, "x (+) (x (+) y')' undefined");
        return;
      }
      if (w != y) r.fail("orthomodular_law", {x, y, z, w}, "x (+) (x (+) y')' != y");
    });
  }
  r.stat("n", n);
  return r;
}

SubOmp interval_omp(const OrthoPoset& p, int a) {
  SubOmp out;
  const int n = p.n();
  for (int z = 0; z < n; ++z)
    if (p.leq(z, a)) out.to_parent.push_back(z);
  const int m = static_cast<int>(out.to_parent.size());
  std::vector<int> back(n, -1);
  for (int i = 0; i < m; ++i) back[out.to_parent[i]] = i;

  out.omp.poset = FinPoset(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (p.leq(out.to_parent[i], out.to_parent[j])) out.omp.poset.up.set(i, j);
  out.omp.bot = back[p.bot];
  out.omp.top = back[a];

  BitRows down = p.poset.up.transpose();
  std::vector<std::uint64_t> buf(down.words());
  out.omp.ocomp.resize(m);
  for (int i = 0; i < m; ++i) {
    int b = out.to_parent[i];
    // b# = a ^ b', computed from the order matrix on demand
    row_and(down.row(a), down.row(p.comp(b)), down.words(), buf.data());
    int greatest = -1;
    buf_for_each(buf.data(), down.words(), [&](int z) {
      if (greatest >= 0) return;
      if (buf_subset(buf.data(), down.row(z), down.words())) greatest = z;
    });
    if (greatest < 0)
      raise(Errc::MissingMeet, "a ^ b' does not exist for a = " + std::to_string(a) +
                                   ", b = " + std::to_string(b));
    out.omp.ocomp[i] = back[greatest];
  }
  return out;
}

OrthoPoset boolean_omp(int k) {
  const int n = 1 << k;
  OrthoPoset p;
  p.poset = FinPoset(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i & j) == i) p.poset.up.set(i, j);
  p.ocomp.resize(n);
  for (int i = 0; i < n; ++i) p.ocomp[i] = (n - 1) & ~i;
  p.bot = 0;
  p.top = n - 1;
  return p;
}

OrthoPoset mo_omp(int k) {
  const int n = (k == 0) ? 2 : 2 * k + 2;
  OrthoPoset p;
  p.poset = FinPoset(n);
  for (int i = 0; i < n; ++i) {
    p.poset.up.set(0, i);
    p.poset.up.set(i, n - 1);
  }
  p.ocomp.assign(n, 0);
  p.ocomp[0] = n - 1;
  p.ocomp[n - 1] = 0;
  for (int i = 1; i + 1 < n; i += 2) {
    p.ocomp[i] = i + 1;
    p.ocomp[i + 1] = i;
  }
  p.bot = 0;
  p.top = n - 1;
  return p;
}

}  // namespace fact
