#include "fact/decomp.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>

#include "fact/error.hpp"

namespace fact {

bool is_product_pair(const EqRel& k1, const EqRel& k2) {
  if (k1.n != k2.n) return false;
  const int n = k1.n;
  if (n == 0) return false;
  if (static_cast<long long>(k1.blocks) * k2.blocks != n) return false;
  std::vector<char> hit(static_cast<size_t>(k1.blocks) * k2.blocks, 0);
  for (int x = 0; x < n; ++x) {
    char& h = hit[static_cast<size_t>(k1.block_of[x]) * k2.blocks + k2.block_of[x]];
    if (h) return false;
    h = 1;
  }
  return true;
}

bool is_product_triple(const EqRel& k1, const EqRel& k2, const EqRel& k3) {
  if (k1.n != k2.n || k1.n != k3.n) return false;
  const int n = k1.n;
  if (n == 0) return false;
  if (static_cast<long long>(k1.blocks) * k2.blocks * k3.blocks != n) return false;
  std::vector<char> hit(static_cast<size_t>(k1.blocks) * k2.blocks * k3.blocks, 0);
  for (int x = 0; x < n; ++x) {
    size_t idx = (static_cast<size_t>(k1.block_of[x]) * k2.blocks + k2.block_of[x]) * k3.blocks +
                 k3.block_of[x];
    if (hit[idx]) return false;
    hit[idx] = 1;
  }
  return true;
}

bool is_disjoint_product(const Decomposition& d) {
  PushoutSquare sq;
  sq.f = d.f1();
  sq.g = d.f2();
  sq.u = FinMap::terminal(sq.f.cod);
  sq.v = FinMap::terminal(sq.g.cod);
  return is_pushout(sq);
}

std::vector<Decomposition> enumerate_decompositions(int n, int max_n) {
  if (n < 1) raise(Errc::EmptySet, "decompositions live over non-empty sets");
  if (n > max_n)
    raise(Errc::LimitExceeded,
          "decomposition enumeration for n = " + std::to_string(n) + " exceeds limit " +
              std::to_string(max_n));
  std::vector<EqRel> parts = all_partitions(n);
  std::vector<Decomposition> out;
  for (const EqRel& p : parts)
    for (const EqRel& q : parts) {
      if (static_cast<long long>(p.blocks) * q.blocks != n) continue;
      if (is_product_pair(p, q)) out.push_back(Decomposition{p, q});
    }
  return out;
}

int DecompAlgebra::index_of(const Decomposition& d) const {
  auto it = index_.find({d.kernel1.rgs(), d.kernel2.rgs()});
  return it == index_.end() ? -1 : it->second;
}

DecompAlgebra decomposition_algebra(int n, int max_n) {
  DecompAlgebra alg;
  alg.set_size = n;
  alg.elems = enumerate_decompositions(n, max_n);
  const int m = static_cast<int>(alg.elems.size());
  for (int i = 0; i < m; ++i)
    alg.index_[{alg.elems[i].kernel1.rgs(), alg.elems[i].kernel2.rgs()}] = i;

  const int zero = alg.index_of(Decomposition{EqRel::nabla(n), EqRel::delta(n)});
  const int one = alg.index_of(Decomposition{EqRel::delta(n), EqRel::nabla(n)});
  alg.oa = OrthoAlgebra::empty(m, zero, one);

  // group partitions by block count, then walk every divisor triple
  std::vector<EqRel> parts = all_partitions(n);
  std::vector<std::vector<const EqRel*>> by_blocks(n + 1);
  for (const EqRel& p : parts) by_blocks[p.blocks].push_back(&p);

  for (int b1 = 1; b1 <= n; ++b1) {
    if (n % b1) continue;
    for (int b2 = 1; b2 <= n / b1; ++b2) {
      if ((n / b1) % b2) continue;
      const int b3 = n / b1 / b2;
      for (const EqRel* c1 : by_blocks[b1])
        for (const EqRel* c2 : by_blocks[b2])
          for (const EqRel* c3 : by_blocks[b3]) {
            if (!is_product_triple(*c1, *c2, *c3)) continue;
            ++alg.ternary_count;
            int d = alg.index_of(Decomposition{*c1, rel_meet(*c2, *c3)});
            int e = alg.index_of(Decomposition{*c2, rel_meet(*c1, *c3)});
            int v = alg.index_of(Decomposition{rel_meet(*c1, *c2), *c3});
            // the three binary readings of a ternary are product pairs
            if (d < 0 || e < 0 || v < 0) {
              alg.witness_value_conflict = true;
              alg.conflict_witness = {d, e, v, -1};
              continue;
            }
            if (alg.oa.defined(d, e) && alg.oa.sum_of(d, e) != v) {
              alg.witness_value_conflict = true;
              alg.conflict_witness = {d, e, alg.oa.sum_of(d, e), v};
              continue;
            }
            alg.oa.define(d, e, v);
          }
    }
  }
  return alg;
}

std::optional<Decomposition> decomp_sum(const DecompAlgebra& alg, const Decomposition& d,
                                        const Decomposition& e) {
  int i = alg.index_of(d), j = alg.index_of(e);
  if (i < 0 || j < 0) raise(Errc::UsageError, "operand is not a decomposition of this carrier");
  if (!alg.oa.defined(i, j)) return std::nullopt;
  return alg.elems[alg.oa.sum_of(i, j)];
}

namespace {

template <class Fn>
void for_each_ternary(int n, Fn&& fn) {
  std::vector<EqRel> parts = all_partitions(n);
  std::vector<std::vector<const EqRel*>> by_blocks(n + 1);
  for (const EqRel& p : parts) by_blocks[p.blocks].push_back(&p);
  for (int b1 = 1; b1 <= n; ++b1) {
    if (n % b1) continue;
    for (int b2 = 1; b2 <= n / b1; ++b2) {
      if ((n / b1) % b2) continue;
      const int b3 = n / b1 / b2;
      for (const EqRel* c1 : by_blocks[b1])
        for (const EqRel* c2 : by_blocks[b2])
          for (const EqRel* c3 : by_blocks[b3])
            if (is_product_triple(*c1, *c2, *c3)) fn(*c1, *c2, *c3);
    }
  }
}

void check_honesty_square(const EqRel& k1, const EqRel& k2, const EqRel& k3, Report& r) {
  FinMap f1 = FinMap::block_map(k1), f2 = FinMap::block_map(k2), f3 = FinMap::block_map(k3);
  for (const FinMap* f : {&f1, &f2, &f3})
    if (!f->is_surjective()) r.fail("projections_epic", {f->dom, f->cod});
  PushoutSquare sq;
  sq.f = pair_map(f1, f3);
  sq.g = pair_map(f2, f3);
  sq.u = proj2(f1.cod, f3.cod);
  sq.v = proj2(f2.cod, f3.cod);
  if (!is_pushout(sq))
    r.fail("ternary_squares_pushout",
           {static_cast<long long>(k1.blocks), k2.blocks, k3.blocks},
           k1.rgs() + "/" + k2.rgs() + "/" + k3.rgs());
}

EqRel grid_kernel(const std::vector<int>& coord, int stride, int width) {
  std::vector<int> labels(coord.size());
  for (size_t i = 0; i < coord.size(); ++i) labels[i] = (coord[i] / stride) % width;
  return EqRel::from_labels(labels);
}

}  // namespace

Report honesty_check(int n, int samples, std::optional<std::uint64_t> seed) {
  if (n < 1) raise(Errc::EmptySet, "honesty is checked over non-empty sets");
  Report r("honesty(n=" + std::to_string(n) + (samples ? ", sampled" : ", exhaustive") + ")");
  r.pass("ternary_squares_pushout");
  r.pass("projections_epic");
  r.pass("binary_products_disjoint");

  long long ternaries = 0, binaries = 0;
  if (samples == 0) {
    if (n > kMaxExhaustiveHonesty)
      raise(Errc::LimitExceeded, "exhaustive honesty check capped at n = " +
                                     std::to_string(kMaxExhaustiveHonesty) + "; pass a sample count and seed");
    for_each_ternary(n, [&](const EqRel& c1, const EqRel& c2, const EqRel& c3) {
      ++ternaries;
      check_honesty_square(c1, c2, c3, r);
    });
    for (const Decomposition& d : enumerate_decompositions(n, n)) {
      ++binaries;
      if (!is_disjoint_product(d)) r.fail("binary_products_disjoint", {}, d.label());
      if (!d.f1().is_surjective() || !d.f2().is_surjective())
        r.fail("projections_epic", {}, d.label());
    }
  } else {
    if (n > kMaxSampledHonesty)
      raise(Errc::LimitExceeded,
            "sampled honesty check capped at n = " + std::to_string(kMaxSampledHonesty));
    if (!seed) raise(Errc::UsageError, "sampling requires an explicit seed");
    r.set_seed(*seed);
    std::mt19937_64 rng(*seed);

    std::vector<std::array<int, 3>> shapes;
    for (int b1 = 1; b1 <= n; ++b1) {
      if (n % b1) continue;
      for (int b2 = 1; b2 <= n / b1; ++b2)
        if ((n / b1) % b2 == 0) shapes.push_back({b1, b2, n / b1 / b2});
    }
    std::vector<int> coord(n);
    for (int s = 0; s < samples; ++s) {
      auto [b1, b2, b3] = shapes[rng() % shapes.size()];
      for (int i = 0; i < n; ++i) coord[i] = i;
      std::shuffle(coord.begin(), coord.end(), rng);
      EqRel k1 = grid_kernel(coord, b2 * b3, b1);
      EqRel k2 = grid_kernel(coord, b3, b2);
      EqRel k3 = grid_kernel(coord, 1, b3);
      ++ternaries;
      check_honesty_square(k1, k2, k3, r);
      Decomposition d{k1, rel_meet(k2, k3)};
      ++binaries;
      if (!is_disjoint_product(d)) r.fail("binary_products_disjoint", {}, d.label());
    }
  }
  r.stat("ternary_diagrams", ternaries);
  r.stat("binary_diagrams", binaries);
  return r;
}

void claims_verify_ternaries(const std::vector<std::array<EqRel, 3>>& triples, Report& r) {
  r.pass("claim2_repeated_factor_trivial");
  for (const auto& t : triples) {
    if (!(t[0] == t[1])) continue;
    if (t[0].blocks != 1)
      r.fail("claim2_repeated_factor_trivial", {t[0].blocks}, "repeated factor is not a point: " + t[0].rgs());
    if (!t[2].is_delta())
      r.fail("claim2_repeated_factor_trivial", {t[2].blocks}, "third leg not bijective: " + t[2].rgs());
  }
}

Report claims_check(int n, int max_n) {
  if (n < 1) raise(Errc::EmptySet, "claims are checked over non-empty sets");
  if (n > max_n)
    raise(Errc::LimitExceeded, "claims check for n = " + std::to_string(n) + " exceeds limit");
  Report r("claims(n=" + std::to_string(n) + ")");
  r.pass("claim1_iso_partner_trivial");
  long long binaries = 0, ternaries = 0, repeated = 0;
  for (const Decomposition& d : enumerate_decompositions(n, max_n)) {
    ++binaries;
    if (d.kernel2.is_delta() && d.kernel1.blocks != 1)
      r.fail("claim1_iso_partner_trivial", {d.kernel1.blocks}, d.label());
    if (d.kernel1.is_delta() && d.kernel2.blocks != 1)
      r.fail("claim1_iso_partner_trivial", {d.kernel2.blocks}, d.label());
  }
  std::vector<std::array<EqRel, 3>> repeated_triples;
  for_each_ternary(n, [&](const EqRel& c1, const EqRel& c2, const EqRel& c3) {
    ++ternaries;
    if (c1 == c2) {
      ++repeated;
      repeated_triples.push_back({c1, c2, c3});
    }
  });
  claims_verify_ternaries(repeated_triples, r);
  r.stat("binary_diagrams", binaries);
  r.stat("ternary_diagrams", ternaries);
  r.stat("repeated_factor_ternaries", repeated);
  return r;
}

CatSection cat_section(const DecompAlgebra& alg, int h_index) {
  const Decomposition& h = alg.elems.at(h_index);
  return cat_section(alg, h_index, decomposition_algebra(h.kernel1.blocks, kMaxDecompSet));
}

CatSection cat_section(const DecompAlgebra& alg, int h_index, const DecompAlgebra& base) {
  if (h_index < 0 || h_index >= static_cast<int>(alg.elems.size()))
    raise(Errc::PreconditionFailed, "decomposition index out of range");
  const Decomposition& h = alg.elems[h_index];
  const int n = alg.set_size;
  const int h1_blocks = h.kernel1.blocks;
  if (base.set_size != h1_blocks)
    raise(Errc::UsageError, "base algebra carrier size does not match blocks(ker h1)");

  CatSection s;
  s.base = base;
  s.report.set_subject("cat_section(n=" + std::to_string(n) + ", h=" + h.label() + ")");
  s.interval = interval_oa(alg.oa, h_index);
  s.report.require("restriction_total", !s.interval.restriction_dropped, {h_index},
                   "an in-interval sum escaped the interval");

  const int isz = static_cast<int>(s.interval.to_parent.size());
  const int bsz = static_cast<int>(base.elems.size());
  std::vector<int> interval_pos(alg.elems.size(), -1);
  for (int i = 0; i < isz; ++i) interval_pos[s.interval.to_parent[i]] = i;

  s.gamma.assign(isz, -1);
  s.phi.assign(bsz, -1);
  s.report.pass("summand_unique");
  s.report.pass("gamma_well_defined");
  s.report.pass("gamma_into_base");

  for (int i = 0; i < isz; ++i) {
    const int j = s.interval.to_parent[i];
    int g = -1, count = 0;
    for (int c = 0; c < static_cast<int>(alg.elems.size()); ++c)
      if (alg.oa.defined(j, c) && alg.oa.sum_of(j, c) == h_index) {
        g = c;
        ++count;
      }
    if (count != 1) {
      s.report.fail("summand_unique", {j, count});
      continue;
    }
    const Decomposition& f = alg.elems[j];
    const Decomposition& gd = alg.elems[g];
    // solve (gamma1, gamma2) o h1 = (f1, g1) pointwise; h1 is surjective
    const int gw = gd.kernel1.blocks;
    std::vector<int> gmap(h1_blocks, -1);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      int u = h.kernel1.block_of[x];
      int val = f.kernel1.block_of[x] * gw + gd.kernel1.block_of[x];
      if (gmap[u] < 0)
        gmap[u] = val;
      else if (gmap[u] != val) {
        s.report.fail("gamma_well_defined", {j, x}, "gamma o h1 inconsistent");
        ok = false;
      }
    }
    if (!ok) continue;
    std::vector<int> l1(h1_blocks), l2(h1_blocks);
    for (int u = 0; u < h1_blocks; ++u) {
      l1[u] = gmap[u] / gw;
      l2[u] = gmap[u] % gw;
    }
    Decomposition img{EqRel::from_labels(l1), EqRel::from_labels(l2)};
    int bidx = base.index_of(img);
    if (bidx < 0) {
      s.report.fail("gamma_into_base", {j}, "image kernels do not form a decomposition of H1");
      continue;
    }
    s.gamma[i] = bidx;
  }

  s.report.pass("phi_into_interval");
  for (int jb = 0; jb < bsz; ++jb) {
    const Decomposition& m = base.elems[jb];
    std::vector<int> first(n), second(n);
    for (int x = 0; x < n; ++x) {
      int u = h.kernel1.block_of[x];
      first[x] = m.kernel1.block_of[u];
      second[x] = m.kernel2.block_of[u];
    }
    Decomposition img{EqRel::from_labels(first),
                      rel_meet(EqRel::from_labels(second), h.kernel2)};
    int aidx = alg.index_of(img);
    int pos = aidx >= 0 ? interval_pos[aidx] : -1;
    if (pos < 0) {
      s.report.fail("phi_into_interval", {jb}, "phi image not in the interval: " + img.label());
      continue;
    }
    s.phi[jb] = pos;
  }

  if (!s.report.all_green()) return s;

  s.report.require("cardinalities_match", isz == bsz, {isz, bsz});
  s.report.pass("mutually_inverse");
  for (int i = 0; i < isz; ++i)
    if (s.phi[s.gamma[i]] != i) s.report.fail("mutually_inverse", {i}, "phi(gamma(d)) != d");
  for (int j = 0; j < bsz; ++j)
    if (s.gamma[s.phi[j]] != j) s.report.fail("mutually_inverse", {j}, "gamma(phi(m)) != m");

  s.report.pass("gamma_preserves_sum");
  for (int i1 = 0; i1 < isz; ++i1)
    for (int i2 = 0; i2 < isz; ++i2) {
      if (!s.interval.oa.defined(i1, i2)) continue;
      int v = s.interval.oa.sum_of(i1, i2);
      if (!base.oa.defined(s.gamma[i1], s.gamma[i2]) ||
          base.oa.sum_of(s.gamma[i1], s.gamma[i2]) != s.gamma[v])
        s.report.fail("gamma_preserves_sum", {i1, i2});
    }
  s.report.pass("phi_preserves_sum");
  for (int j1 = 0; j1 < bsz; ++j1)
    for (int j2 = 0; j2 < bsz; ++j2) {
      if (!base.oa.defined(j1, j2)) continue;
      int v = base.oa.sum_of(j1, j2);
      if (!s.interval.oa.defined(s.phi[j1], s.phi[j2]) ||
          s.interval.oa.sum_of(s.phi[j1], s.phi[j2]) != s.phi[v])
        s.report.fail("phi_preserves_sum", {j1, j2});
    }

  s.report.require("bounds_preserved",
                   s.gamma[s.interval.oa.zero] == base.oa.zero &&
                       s.gamma[s.interval.oa.one] == base.oa.one,
                   {s.gamma[s.interval.oa.zero], s.gamma[s.interval.oa.one]});

  s.report.stat("interval_size", isz);
  s.report.stat("base_size", bsz);
  return s;
}

}  // namespace fact
