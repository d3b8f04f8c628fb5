#include "fact/setfact.hpp"

#include <map>
#include <string>

#include "fact/error.hpp"
#include "fact/orthoalgebra.hpp"

namespace fact {

bool is_factor_pair(const EqRel& r, const EqRel& s) {
  return rel_meet(r, s).is_delta() && compose_is_nabla(r, s);
}

std::vector<FactorPair> factor_pairs(int n, int max_n) {
  if (n < 1) raise(Errc::UsageError, "factor pairs need a non-empty set");
  if (n > max_n)
    raise(Errc::LimitExceeded,
          "factor pair enumeration for n = " + std::to_string(n) + " exceeds limit " +
              std::to_string(max_n));
  std::vector<EqRel> parts = all_partitions(n);
  std::vector<FactorPair> out;
  for (const EqRel& r : parts)
    for (const EqRel& s : parts) {
      // a factor pair forces |blocks r| * |blocks s| = n
      if (static_cast<long long>(r.blocks) * s.blocks != n) continue;
      if (is_factor_pair(r, s)) out.push_back(FactorPair{r, s});
    }
  return out;
}

int FactOmp::index_of(const FactorPair& p) const {
  for (size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i] == p) return static_cast<int>(i);
  return -1;
}

FactOmp factor_pair_omp(int n, int max_n) {
  FactOmp out;
  out.pairs = factor_pairs(n, max_n);
  const int m = static_cast<int>(out.pairs.size());

  // dedupe the partitions in play and precompute refine/permute lookups
  std::map<std::string, int> pid;
  std::vector<const EqRel*> prefs;
  auto intern = [&](const EqRel& r) {
    auto [it, fresh] = pid.emplace(r.rgs(), static_cast<int>(pid.size()));
    if (fresh) prefs.push_back(&r);
    return it->second;
  };
  std::vector<std::pair<int, int>> pids(m);
  for (int i = 0; i < m; ++i)
    pids[i] = {intern(out.pairs[i].theta1), intern(out.pairs[i].theta2)};
  const int np = static_cast<int>(prefs.size());
  BitRows refines(np, np), permutes(np, np);
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) {
      if (prefs[a]->refines(*prefs[b])) refines.set(a, b);
      if (rel_permute(*prefs[a], *prefs[b])) permutes.set(a, b);
    }

  out.omp.poset = FinPoset(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [t1, t2] = pids[i];
      auto [p1, p2] = pids[j];
      if (!refines.get(t1, p1) || !refines.get(p2, t2)) continue;
      // "all relations involved permute", read as: every pair of the four
      if (!permutes.get(t1, t2) || !permutes.get(t1, p1) || !permutes.get(t1, p2) ||
          !permutes.get(t2, p1) || !permutes.get(t2, p2) || !permutes.get(p1, p2))
        continue;
      out.omp.poset.up.set(i, j);
    }
  out.omp.ocomp.resize(m);
  for (int i = 0; i < m; ++i)
    out.omp.ocomp[i] = out.index_of(FactorPair{out.pairs[i].theta2, out.pairs[i].theta1});
  out.omp.bot = out.index_of(FactorPair{EqRel::delta(n), EqRel::nabla(n)});
  out.omp.top = out.index_of(FactorPair{EqRel::nabla(n), EqRel::delta(n)});
  return out;
}

BridgeCertificate factor_decomposition_bridge(int n, int max_n) {
  BridgeCertificate b;
  b.report.set_subject("bridge(n=" + std::to_string(n) + ")");
  b.fact = factor_pair_omp(n, max_n);
  b.alg = decomposition_algebra(n, max_n);
  const int m = static_cast<int>(b.alg.elems.size());

  // [f1,f2] corresponds to (ker f2, ker f1); validated below, not assumed
  b.to_fact.assign(m, -1);
  b.report.pass("bijective");
  std::vector<char> hit(b.fact.pairs.size(), 0);
  for (int i = 0; i < m; ++i) {
    int f = b.fact.index_of(FactorPair{b.alg.elems[i].kernel2, b.alg.elems[i].kernel1});
    if (f < 0) {
      b.report.fail("bijective", {i}, "decomposition has no factor-pair image");
      continue;
    }
    if (hit[f]) b.report.fail("bijective", {i, f}, "image collides");
    hit[f] = 1;
    b.to_fact[i] = f;
  }
  if (static_cast<size_t>(m) != b.fact.pairs.size())
    b.report.fail("bijective", {m, static_cast<long long>(b.fact.pairs.size())}, "carrier sizes differ");
  if (!b.report.all_green()) return b;

  b.report.require("bounds_preserved",
                   b.to_fact[b.alg.oa.zero] == b.fact.omp.bot &&
                       b.to_fact[b.alg.oa.one] == b.fact.omp.top,
                   {b.to_fact[b.alg.oa.zero], b.to_fact[b.alg.oa.one]});

  // order on the algebra side is the summand order
  BitRows aleq(m, m);
  for (int d = 0; d < m; ++d) {
    for (int c = 0; c < m; ++c)
      if (b.alg.oa.defined(d, c)) aleq.set(d, b.alg.oa.sum_of(d, c));
  }
  b.report.pass("order_preserved");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (aleq.get(i, j) != b.fact.omp.leq(b.to_fact[i], b.to_fact[j]))
        b.report.fail("order_preserved", {i, j});

  b.report.pass("complement_preserved");
  for (int i = 0; i < m; ++i) {
    int swapped = b.alg.index_of(Decomposition{b.alg.elems[i].kernel2, b.alg.elems[i].kernel1});
    if (swapped < 0 || b.to_fact[swapped] != b.fact.omp.comp(b.to_fact[i]))
      b.report.fail("complement_preserved", {i});
  }

  // sums agree with orthogonal joins on the OMP side
  b.report.pass("sum_agrees");
  if (check_omp(b.fact.omp).all_green()) {
    OrthoAlgebra fact_oa = omp_to_oa(b.fact.omp);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        bool da = b.alg.oa.defined(i, j);
        bool df = fact_oa.defined(b.to_fact[i], b.to_fact[j]);
        if (da != df) {
          b.report.fail("sum_agrees", {i, j}, "definedness differs");
          continue;
        }
        if (da && b.to_fact[b.alg.oa.sum_of(i, j)] != fact_oa.sum_of(b.to_fact[i], b.to_fact[j]))
          b.report.fail("sum_agrees", {i, j}, "values differ");
      }
  } else {
    b.report.fail("sum_agrees", {n}, "factor-pair OMP failed check_omp");
  }

  b.report.stat("carrier", m);
  return b;
}

SetSection set_section(const BridgeCertificate& bridge, int pair_index) {
  const FactOmp& fact = bridge.fact;
  if (pair_index < 0 || pair_index >= static_cast<int>(fact.pairs.size()))
    raise(Errc::PreconditionFailed, "factor pair index out of range");
  if (!bridge.report.all_green())
    raise(Errc::PreconditionFailed, "bridge certificate is not green");

  SetSection s;
  const FactorPair& p = fact.pairs[pair_index];
  s.report.set_subject("set_section(n=" + std::to_string(p.theta1.n) +
                       ", p=" + p.theta1.rgs() + "/" + p.theta2.rgs() + ")");

  s.interval = interval_omp(fact.omp, pair_index);
  const int k = p.theta2.blocks;  // the section lives over X / theta2

  // transport: fact interval -> algebra interval -> gamma -> fact of quotient
  int h_idx = bridge.alg.index_of(Decomposition{p.theta2, p.theta1});
  CatSection cat = cat_section(bridge.alg, h_idx);
  s.report.require("categorical_section_green", cat.report.all_green(), {h_idx});
  BridgeCertificate small = factor_decomposition_bridge(k);
  s.report.require("quotient_bridge_green", small.report.all_green(), {k});
  s.target = small.fact;
  if (!s.report.all_green()) return s;

  const int isz = static_cast<int>(s.interval.to_parent.size());
  std::vector<int> cat_pos(bridge.alg.elems.size(), -1);
  for (size_t i = 0; i < cat.interval.to_parent.size(); ++i)
    cat_pos[cat.interval.to_parent[i]] = static_cast<int>(i);

  s.sigma.assign(isz, -1);
  s.report.pass("transport_defined");
  for (int i = 0; i < isz; ++i) {
    const FactorPair& q = fact.pairs[s.interval.to_parent[i]];
    int d = bridge.alg.index_of(Decomposition{q.theta2, q.theta1});
    int dp = d >= 0 ? cat_pos[d] : -1;
    if (dp < 0) {
      s.report.fail("transport_defined", {i}, "interval element missed the algebra interval");
      continue;
    }
    s.sigma[i] = small.to_fact[cat.gamma[dp]];
  }
  if (!s.report.all_green()) return s;

  s.report.require("cardinalities_match", isz == static_cast<int>(s.target.pairs.size()),
                   {isz, static_cast<long long>(s.target.pairs.size())});
  s.report.pass("bijective");
  std::vector<char> hit(s.target.pairs.size(), 0);
  for (int v : s.sigma) {
    if (v < 0 || hit[v]) {
      s.report.fail("bijective", {v});
      continue;
    }
    hit[v] = 1;
  }
  s.report.pass("order_iso");
  for (int i = 0; i < isz; ++i)
    for (int j = 0; j < isz; ++j)
      if (s.interval.omp.leq(i, j) != s.target.omp.leq(s.sigma[i], s.sigma[j]))
        s.report.fail("order_iso", {i, j});
  s.report.pass("complement_preserved");
  for (int i = 0; i < isz; ++i)
    if (s.sigma[s.interval.omp.comp(i)] != s.target.omp.comp(s.sigma[i]))
      s.report.fail("complement_preserved", {i});
  s.report.require("bounds_preserved",
                   s.sigma[s.interval.omp.bot] == s.target.omp.bot &&
                       s.sigma[s.interval.omp.top] == s.target.omp.top,
                   {});
  s.report.stat("interval_size", isz);
  s.report.stat("quotient_set", k);
  return s;
}

}  // namespace fact
