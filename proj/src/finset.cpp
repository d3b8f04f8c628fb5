#include "fact/finset.hpp"

#include <numeric>
#include <string>

#include "fact/error.hpp"

namespace fact {

FinMap FinMap::identity(int n) {
  FinMap f;
  f.dom = f.cod = n;
  f.image.resize(n);
  std::iota(f.image.begin(), f.image.end(), 0);
  return f;
}

FinMap FinMap::terminal(int n) {
  FinMap f;
  f.dom = n;
  f.cod = 1;
  f.image.assign(n, 0);
  return f;
}

FinMap FinMap::block_map(const EqRel& r) {
  FinMap f;
  f.dom = r.n;
  f.cod = r.blocks;
  f.image = r.block_of;
  return f;
}

bool FinMap::is_surjective() const {
  std::vector<char> hit(cod, 0);
  for (int v : image) hit[v] = 1;
  for (char h : hit)
    if (!h) return false;
  return true;
}

EqRel FinMap::kernel() const { return EqRel::from_labels(image); }

FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.cod != g.dom)
    raise(Errc::SizeMismatch,
          "cod " + std::to_string(f.cod) + " does not match dom " + std::to_string(g.dom));
  FinMap h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.image.resize(f.dom);
  for (int x = 0; x < f.dom; ++x) h.image[x] = g.image[f.image[x]];
  return h;
}

FinMap pair_map(const FinMap& f, const FinMap& g) {
  if (f.dom != g.dom) raise(Errc::SizeMismatch, "pair of maps with different domains");
  FinMap h;
  h.dom = f.dom;
  h.cod = f.cod * g.cod;
  h.image.resize(f.dom);
  for (int x = 0; x < f.dom; ++x) h.image[x] = f.image[x] * g.cod + g.image[x];
  return h;
}

FinMap proj1(int c1, int c2) {
  FinMap f;
  f.dom = c1 * c2;
  f.cod = c1;
  f.image.resize(f.dom);
  for (int x = 0; x < f.dom; ++x) f.image[x] = x / c2;
  return f;
}

FinMap proj2(int c1, int c2) {
  FinMap f;
  f.dom = c1 * c2;
  f.cod = c2;
  f.image.resize(f.dom);
  for (int x = 0; x < f.dom; ++x) f.image[x] = x % c2;
  return f;
}

PushoutResult pushout(const FinMap& f, const FinMap& g) {
  if (f.dom != g.dom) raise(Errc::SizeMismatch, "span legs have different domains");
  if (f.dom == 0 || f.cod == 0 || g.cod == 0)
    raise(Errc::EmptySet, "pushouts are taken in the category of non-empty sets");
  const int nb = f.cod, nc = g.cod;
  std::vector<int> parent(nb + nc);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < f.dom; ++a) {
    int rb = find(f.image[a]), rc = find(nb + g.image[a]);
    if (rb != rc) parent[rc] = rb;
  }
  std::vector<int> id(nb + nc, -1);
  int next = 0;
  for (int x = 0; x < nb + nc; ++x) {
    int r = find(x);
    if (id[r] < 0) id[r] = next++;
  }
  PushoutResult out;
  out.size = next;
  out.leg1.dom = nb;
  out.leg1.cod = next;
  out.leg1.image.resize(nb);
  for (int b = 0; b < nb; ++b) out.leg1.image[b] = id[find(b)];
  out.leg2.dom = nc;
  out.leg2.cod = next;
  out.leg2.image.resize(nc);
  for (int c = 0; c < nc; ++c) out.leg2.image[c] = id[find(nb + c)];
  return out;
}

bool is_pushout(const PushoutSquare& sq) {
  if (compose(sq.u, sq.f) != compose(sq.v, sq.g)) return false;
  PushoutResult canon = pushout(sq.f, sq.g);
  if (canon.size != sq.u.cod) return false;
  // comparison map: class of b -> u(b), class of c -> v(c); well defined
  // because the square commutes, bijective iff the square is a pushout
  std::vector<int> cmp(canon.size, -1);
  for (int b = 0; b < sq.u.dom; ++b) {
    int cls = canon.leg1.image[b];
    if (cmp[cls] >= 0 && cmp[cls] != sq.u.image[b]) return false;
    cmp[cls] = sq.u.image[b];
  }
  for (int c = 0; c < sq.v.dom; ++c) {
    int cls = canon.leg2.image[c];
    if (cmp[cls] >= 0 && cmp[cls] != sq.v.image[c]) return false;
    cmp[cls] = sq.v.image[c];
  }
  std::vector<char> hit(sq.u.cod, 0);
  for (int v : cmp) {
    if (v < 0) return false;
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

}  // namespace fact
