#include "fact/orthoalgebra.hpp"

#include <string>
#include <vector>

#include "fact/error.hpp"

namespace fact {

Report check_oa(const OrthoAlgebra& a) {
  Report r("oa(n=" + std::to_string(a.n) + ")");
  const int n = a.n;
  r.pass("commutative");
  r.pass("associative");
  r.pass("unique_complement");
  r.pass("self_orthogonal_only_zero");
  r.pass("cancellative");

  long long defined_pairs = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!a.defined(x, y)) continue;
      ++defined_pairs;
      if (!a.defined(y, x) || a.sum_of(y, x) != a.sum_of(x, y))
        r.fail("commutative", {x, y}, "x (+) y and y (+) x disagree");
    }

  // both association orders must be defined together, with equal values
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!a.defined(x, y)) continue;
      const int xy = a.sum_of(x, y);
      for (int z = 0; z < n; ++z) {
        if (a.defined(xy, z)) {
          if (!a.defined(y, z) || !a.defined(x, a.sum_of(y, z)) ||
              a.sum_of(x, a.sum_of(y, z)) != a.sum_of(xy, z))
            r.fail("associative", {x, y, z}, "(x (+) y) (+) z vs x (+) (y (+) z)");
        }
        if (a.defined(y, z) && a.defined(x, a.sum_of(y, z))) {
          if (!a.defined(xy, z) || a.sum_of(xy, z) != a.sum_of(x, a.sum_of(y, z)))
            r.fail("associative", {x, y, z}, "x (+) (y (+) z) vs (x (+) y) (+) z");
        }
      }
    }

  for (int x = 0; x < n; ++x) {
    int count = 0;
    for (int y = 0; y < n; ++y)
      if (a.defined(x, y) && a.sum_of(x, y) == a.one) ++count;
    if (count != 1) r.fail("unique_complement", {x, count}, "complement count != 1");
  }

  for (int x = 0; x < n; ++x)
    if (a.defined(x, x) && x != a.zero) r.fail("self_orthogonal_only_zero", {x});

  std::vector<int> seen(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!a.defined(x, y)) continue;
      int v = a.sum_of(x, y);
      if (seen[v] >= 0 && seen[v] != y)
        r.fail("cancellative", {x, seen[v], y, v}, "x (+) b = x (+) c with b != c");
      seen[v] = y;
    }
    for (int y = 0; y < n; ++y)
      if (a.defined(x, y)) seen[a.sum_of(x, y)] = -1;
  }

  r.stat("n", n);
  r.stat("defined_pairs", defined_pairs);
  return r;
}

OrthoAlgebra omp_to_oa(const OrthoPoset& p) {
  Report chk = check_omp(p);
  if (!chk.all_green()) raise(Errc::NotAnOmp, "check_omp reports violations");
  const int n = p.n();
  OrthoAlgebra a = OrthoAlgebra::empty(n, p.bot, p.top);
  const int words = p.poset.up.words();
  std::vector<std::uint64_t> buf(words);
  for (int x = 0; x < n; ++x)
    p.poset.up.for_each_in_row(x, [&](int yc) {
      int y = p.comp(yc);
      row_and(p.poset.up.row(x), p.poset.up.row(y), words, buf.data());
      int least = -1;
      buf_for_each(buf.data(), words, [&](int u) {
        if (least >= 0) return;
        if (buf_subset(buf.data(), p.poset.up.row(u), words)) least = u;
      });
      // check_omp green guarantees the lub exists for orthogonal pairs
      a.define(x, y, least);
    });
  return a;
}

InducedPoset oa_to_orthoposet(const OrthoAlgebra& a) {
  Report chk = check_oa(a);
  if (!chk.all_green()) raise(Errc::NotAnOa, "check_oa reports violations");
  const int n = a.n;
  InducedPoset out;
  out.poset.poset = FinPoset(n);
  for (int x = 0; x < n; ++x)
    for (int c = 0; c < n; ++c)
      if (a.defined(x, c)) out.poset.poset.up.set(x, a.sum_of(x, c));
  out.poset.bot = a.zero;
  out.poset.top = a.one;
  out.poset.ocomp.resize(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a.defined(x, y) && a.sum_of(x, y) == a.one) out.poset.ocomp[x] = y;

  // a (+) b is always a minimal upper bound; flag when some pair misses least
  out.is_omp = true;
  const FinPoset& P = out.poset.poset;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!a.defined(x, y)) continue;
      int v = a.sum_of(x, y);
      for (int u = 0; u < n; ++u)
        if (P.leq(x, u) && P.leq(y, u) && !P.leq(v, u)) {
          out.is_omp = false;
          if (out.non_least.size() < 16) out.non_least.push_back({x, y, v});
          break;
        }
    }
  return out;
}

SubOa interval_oa(const OrthoAlgebra& a, int elem) {
  SubOa out;
  const int n = a.n;
  std::vector<int> back(n, -1);
  for (int b = 0; b < n; ++b) {
    bool below = false;
    for (int c = 0; c < n && !below; ++c)
      if (a.defined(b, c) && a.sum_of(b, c) == elem) below = true;
    if (below) {
      back[b] = static_cast<int>(out.to_parent.size());
      out.to_parent.push_back(b);
    }
  }
  if (back[a.zero] < 0 || back[elem] < 0)
    raise(Errc::NotAnOa, "interval carrier misses a constant; input violates the OA axioms");
  const int m = static_cast<int>(out.to_parent.size());
  out.oa = OrthoAlgebra::empty(m, back[a.zero], back[elem]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int x = out.to_parent[i], y = out.to_parent[j];
      if (!a.defined(x, y)) continue;
      int v = a.sum_of(x, y);
      if (back[v] >= 0)
        out.oa.define(i, j, back[v]);
      else
        out.restriction_dropped = true;  // value escapes the interval
    }
  return out;
}

}  // namespace fact
