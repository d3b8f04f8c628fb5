#include "fact/ring_omp.hpp"

#include <algorithm>
#include <string>

#include "fact/error.hpp"
#include "fact/orthoalgebra.hpp"

namespace fact {

std::vector<int> idempotents(const FinRing& r) {
  std::vector<int> out;
  for (int x = 0; x < r.n; ++x)
    if (r.mul_of(x, x) == x) out.push_back(x);
  return out;
}

int RingOmp::index_of(int ring_elem) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), ring_elem);
  if (it == elements.end() || *it != ring_elem) return -1;
  return static_cast<int>(it - elements.begin());
}

RingOmp idempotent_omp(const FinRing& r) {
  RingOmp out;
  out.elements = idempotents(r);
  const int m = static_cast<int>(out.elements.size());
  out.omp.poset = FinPoset(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int e = out.elements[i], f = out.elements[j];
      if (r.mul_of(e, f) == e && r.mul_of(f, e) == e) out.omp.poset.up.set(i, j);
    }
  out.omp.ocomp.resize(m);
  for (int i = 0; i < m; ++i) {
    int e = out.elements[i];
    out.omp.ocomp[i] = out.index_of(r.add_of(r.one, r.neg_of(e)));  // 1 - e
  }
  out.omp.bot = out.index_of(r.zero);
  out.omp.top = out.index_of(r.one);
  return out;
}

CornerRing corner_ring(const FinRing& r, int e) {
  if (r.mul_of(e, e) != e)
    raise(Errc::NotIdempotent, std::to_string(e) + " is not idempotent");
  CornerRing out;
  for (int x = 0; x < r.n; ++x)
    if (r.mul_of(e, x) == x && r.mul_of(x, e) == x) out.to_parent.push_back(x);
  const int m = static_cast<int>(out.to_parent.size());
  std::vector<int> back(r.n, -1);
  for (int i = 0; i < m; ++i) back[out.to_parent[i]] = i;

  FinRing& c = out.ring;
  c.n = m;
  c.zero = back[r.zero];
  c.one = back[e];
  c.add.resize(static_cast<size_t>(m) * m);
  c.mul.resize(static_cast<size_t>(m) * m);
  c.neg.resize(m);
  for (int i = 0; i < m; ++i) {
    c.neg[i] = back[r.neg_of(out.to_parent[i])];
    for (int j = 0; j < m; ++j) {
      // sums and products of corner members stay in the corner
      c.add[static_cast<size_t>(i) * m + j] = back[r.add_of(out.to_parent[i], out.to_parent[j])];
      c.mul[static_cast<size_t>(i) * m + j] = back[r.mul_of(out.to_parent[i], out.to_parent[j])];
    }
  }
  return out;
}

RingSection ring_section(const FinRing& r, int e) {
  if (r.mul_of(e, e) != e)
    raise(Errc::NotIdempotent, std::to_string(e) + " is not idempotent");
  RingSection s;
  s.report.set_subject("ring_section(e=" + std::to_string(e) + ")");
  s.parent = idempotent_omp(r);
  s.corner = corner_ring(r, e);
  s.corner_omp = idempotent_omp(s.corner.ring);
  const int e_idx = s.parent.index_of(e);

  // (i) carrier equality, as literal sets of ring elements
  std::vector<int> down_set;
  for (int i = 0; i < s.parent.omp.n(); ++i)
    if (s.parent.omp.leq(i, e_idx)) down_set.push_back(s.parent.elements[i]);
  std::vector<int> corner_set;
  for (int i : s.corner_omp.elements) corner_set.push_back(s.corner.to_parent[i]);
  std::sort(corner_set.begin(), corner_set.end());
  s.report.pass("carrier_equal");
  for (int f : down_set)
    if (!std::binary_search(corner_set.begin(), corner_set.end(), f))
      s.report.fail("carrier_equal", {f}, "in e-down but not in E(R_e)");
  for (int g : corner_set)
    if (!std::binary_search(down_set.begin(), down_set.end(), g))
      s.report.fail("carrier_equal", {g}, "in E(R_e) but not in e-down");
  if (!s.report.all_green()) return s;

  // (ii) both orders are gh = g = hg; compare them literally
  s.report.pass("order_coincides");
  for (int f : down_set)
    for (int g : down_set) {
      bool in_parent = s.parent.omp.leq(s.parent.index_of(f), s.parent.index_of(g));
      int cf = -1, cg = -1;
      for (size_t i = 0; i < s.corner.to_parent.size(); ++i) {
        if (s.corner.to_parent[i] == f) cf = static_cast<int>(i);
        if (s.corner.to_parent[i] == g) cg = static_cast<int>(i);
      }
      bool in_corner = s.corner_omp.omp.leq(s.corner_omp.index_of(cf), s.corner_omp.index_of(cg));
      if (in_parent != in_corner) s.report.fail("order_coincides", {f, g});
    }

  // (iii) orthocomplement: meet route e ^ f', OA route (unique d <= e with
  // f (+) d = e), the corner's own complement, and the literal formulas
  // e - f and (1-f)e must all agree
  OrthoAlgebra oa;
  bool have_oa = true;
  try {
    oa = omp_to_oa(s.parent.omp);
  } catch (const Error&) {
    have_oa = false;
    s.report.fail("ocomp_coincides", {e}, "E(R) failed check_omp; no OA route");
  }
  if (!have_oa) return s;

  s.report.pass("ocomp_coincides");
  s.report.pass("routes_agree");
  for (int f : down_set) {
    int f_idx = s.parent.index_of(f);
    // meet route in the idempotent poset (meets can be missing there)
    std::optional<int> meet = s.parent.omp.poset.glb(e_idx, s.parent.omp.comp(f_idx));
    // OA route
    int oa_route = -1, count = 0;
    for (int d = 0; d < s.parent.omp.n(); ++d)
      if (s.parent.omp.leq(d, e_idx) && oa.defined(f_idx, d) && oa.sum_of(f_idx, d) == e_idx) {
        oa_route = d;
        ++count;
      }
    if (count != 1) {
      s.report.fail("ocomp_coincides", {f, count}, "OA summand not unique");
      continue;
    }
    if (meet && *meet != oa_route) s.report.fail("routes_agree", {f, *meet, oa_route});
    int sharp = s.parent.elements[meet ? *meet : oa_route];

    int e_minus_f = r.sub(e, f);
    int one_minus_f_e = r.mul_of(r.add_of(r.one, r.neg_of(f)), e);
    int f_corner = static_cast<int>(std::find(s.corner.to_parent.begin(), s.corner.to_parent.end(), f) -
                                    s.corner.to_parent.begin());
    int cc = s.corner_omp.omp.comp(s.corner_omp.index_of(f_corner));
    int corner_comp = s.corner.to_parent[s.corner_omp.elements[cc]];
    if (sharp != e_minus_f) s.report.fail("ocomp_coincides", {f, sharp, e_minus_f}, "f# != e - f");
    if (sharp != one_minus_f_e)
      s.report.fail("ocomp_coincides", {f, sharp, one_minus_f_e}, "f# != (1-f)e");
    if (sharp != corner_comp)
      s.report.fail("ocomp_coincides", {f, sharp, corner_comp}, "f# != complement in E(R_e)");
  }

  s.report.stat("interval_size", static_cast<long long>(down_set.size()));
  s.report.stat("corner_size", s.corner.ring.n);
  return s;
}

}  // namespace fact
