#include "fact/lattice.hpp"

#include <string>

#include "fact/error.hpp"

namespace fact {

FinLattice build_lattice(const FinPoset& poset, int max_n) {
  const int n = poset.n;
  if (n > max_n)
    raise(Errc::LimitExceeded, "lattice carrier " + std::to_string(n) + " exceeds limit " +
                                   std::to_string(max_n));
  if (n == 0) raise(Errc::NotBounded, "empty carrier has no bounds");
  FinLattice L;
  L.poset = poset;
  auto bot = poset.minimum();
  auto top = poset.maximum();
  if (!bot) raise(Errc::NotBounded, "no minimum element");
  if (!top) raise(Errc::NotBounded, "no maximum element");
  L.bot = *bot;
  L.top = *top;
  L.meet.assign(static_cast<size_t>(n) * n, 0);
  L.join.assign(static_cast<size_t>(n) * n, 0);

  BitRows down = poset.up.transpose();
  std::vector<std::uint64_t> buf(poset.up.words());
  auto pick = [&](const BitRows& rows, int i, int j, bool greatest) -> int {
    row_and(rows.row(i), rows.row(j), rows.words(), buf.data());
    int found = -1;
    buf_for_each(buf.data(), rows.words(), [&](int z) {
      if (found >= 0) return;
      // greatest of lower bounds: every bound below-or-equal z; dually for lub
      if (buf_subset(buf.data(), greatest ? down.row(z) : poset.up.row(z), rows.words())) found = z;
    });
    return found;
  };

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int m = pick(down, i, j, true);
      if (m < 0)
        raise(Errc::NotALattice,
              "pair (" + std::to_string(i) + "," + std::to_string(j) + ") has no greatest lower bound");
      int u = pick(poset.up, i, j, false);
      if (u < 0)
        raise(Errc::NotALattice,
              "pair (" + std::to_string(i) + "," + std::to_string(j) + ") has no least upper bound");
      L.meet[static_cast<size_t>(i) * n + j] = L.meet[static_cast<size_t>(j) * n + i] = m;
      L.join[static_cast<size_t>(i) * n + j] = L.join[static_cast<size_t>(j) * n + i] = u;
    }
  return L;
}

std::optional<std::array<int, 3>> modularity_witness(const FinLattice& L) {
  const int n = L.n();
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      if (!L.leq(c, b)) continue;
      for (int a = 0; a < n; ++a)
        if (L.join_of(c, L.meet_of(a, b)) != L.meet_of(L.join_of(c, a), b))
          return std::array<int, 3>{a, b, c};
    }
  return std::nullopt;
}

bool is_modular(const FinLattice& L) { return !modularity_witness(L).has_value(); }

std::optional<int> modular_pair_witness(const FinLattice& L, int a, int b) {
  for (int c = 0; c < L.n(); ++c) {
    if (!L.leq(c, b)) continue;
    if (L.join_of(c, L.meet_of(a, b)) != L.meet_of(L.join_of(c, a), b)) return c;
  }
  return std::nullopt;
}

std::optional<int> dual_modular_pair_witness(const FinLattice& L, int a, int b) {
  for (int c = 0; c < L.n(); ++c) {
    if (!L.leq(b, c)) continue;
    if (L.meet_of(c, L.join_of(a, b)) != L.join_of(L.meet_of(c, a), b)) return c;
  }
  return std::nullopt;
}

bool modular_pair(const FinLattice& L, int a, int b) {
  return !modular_pair_witness(L, a, b).has_value();
}

bool dual_modular_pair(const FinLattice& L, int a, int b) {
  return !dual_modular_pair_witness(L, a, b).has_value();
}

const char* symmetry_class_name(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Modular: return "Modular";
    case SymmetryClass::Symmetric: return "Symmetric";
    case SymmetryClass::MSymmetricOnly: return "MSymmetricOnly";
    case SymmetryClass::MStarSymmetricOnly: return "MStarSymmetricOnly";
    case SymmetryClass::None: return "None";
  }
  return "?";
}

SymmetryClass symmetry_class(const FinLattice& L) {
  if (is_modular(L)) return SymmetryClass::Modular;
  const int n = L.n();
  bool m_sym = true, mstar_sym = true;
  for (int a = 0; a < n && (m_sym || mstar_sym); ++a)
    for (int b = 0; b < n && (m_sym || mstar_sym); ++b) {
      if (m_sym && modular_pair(L, a, b) && !modular_pair(L, b, a)) m_sym = false;
      if (mstar_sym && dual_modular_pair(L, a, b) && !dual_modular_pair(L, b, a)) mstar_sym = false;
    }
  if (m_sym && mstar_sym) return SymmetryClass::Symmetric;
  if (m_sym) return SymmetryClass::MSymmetricOnly;
  if (mstar_sym) return SymmetryClass::MStarSymmetricOnly;
  return SymmetryClass::None;
}

SubLattice interval_lattice(const FinLattice& L, int lo, int hi) {
  if (!L.leq(lo, hi))
    raise(Errc::BadInterval, std::to_string(lo) + " is not below " + std::to_string(hi));
  SubLattice out;
  for (int z = 0; z < L.n(); ++z)
    if (L.leq(lo, z) && L.leq(z, hi)) out.to_parent.push_back(z);
  const int m = static_cast<int>(out.to_parent.size());
  std::vector<int> back(L.n(), -1);
  for (int i = 0; i < m; ++i) back[out.to_parent[i]] = i;

  FinPoset p(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (L.leq(out.to_parent[i], out.to_parent[j])) p.up.set(i, j);
  out.lattice.poset = p;
  out.lattice.bot = back[lo];
  out.lattice.top = back[hi];
  out.lattice.meet.assign(static_cast<size_t>(m) * m, 0);
  out.lattice.join.assign(static_cast<size_t>(m) * m, 0);
  // meets/joins of interval members stay in the interval
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      out.lattice.meet[static_cast<size_t>(i) * m + j] = back[L.meet_of(out.to_parent[i], out.to_parent[j])];
      out.lattice.join[static_cast<size_t>(i) * m + j] = back[L.join_of(out.to_parent[i], out.to_parent[j])];
    }
  return out;
}

FinLattice boolean_lattice(int k, int max_n) {
  if (k < 0) raise(Errc::UsageError, "negative exponent");
  if (k > 20 || (1 << k) > max_n)
    raise(Errc::LimitExceeded, "2^" + std::to_string(k) + " exceeds limit " + std::to_string(max_n));
  const int n = 1 << k;
  FinPoset p(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i & j) == i) p.up.set(i, j);
  return build_lattice(p, max_n);
}

FinLattice mo_lattice(int k, int max_n) {
  if (k < 0) raise(Errc::UsageError, "negative atom pair count");
  const int n = (k == 0) ? 2 : 2 * k + 2;
  if (n > max_n) raise(Errc::LimitExceeded, "carrier " + std::to_string(n) + " exceeds limit");
  FinPoset p(n);
  // 0 = bot, n-1 = top, 1..2k atoms
  for (int i = 0; i < n; ++i) {
    p.up.set(0, i);
    p.up.set(i, n - 1);
  }
  return build_lattice(p, max_n);
}

FinLattice chain_lattice(int k, int max_n) {
  if (k < 0) raise(Errc::UsageError, "negative chain length");
  const int n = k + 1;
  if (n > max_n) raise(Errc::LimitExceeded, "carrier " + std::to_string(n) + " exceeds limit");
  FinPoset p(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.up.set(i, j);
  return build_lattice(p, max_n);
}

FinLattice subspace_lattice(int q, int d, int max_n) {
  if (q != 2 && q != 3 && q != 5 && q != 7)
    raise(Errc::UsageError, "field order " + std::to_string(q) + " not supported (prime <= 7)");
  if (d < 0 || d > 4) raise(Errc::UsageError, "dimension " + std::to_string(d) + " not in 0..4");
  int nvec = 1;
  for (int i = 0; i < d; ++i) nvec *= q;

  // GF(q) addition table (q prime, so mod-q arithmetic)
  std::vector<int> addq(static_cast<size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) addq[static_cast<size_t>(a) * q + b] = (a + b) % q;

  auto vec_add = [&](int u, int v) {
    int out = 0, pw = 1;
    for (int i = 0; i < d; ++i) {
      out += addq[static_cast<size_t>(u % q) * q + (v % q)] * pw;
      u /= q;
      v /= q;
      pw *= q;
    }
    return out;
  };

  // A subspace of GF(q)^d is an additive subgroup (scalars are repeated
  // sums over a prime field); close generator sets under vector addition.
  auto span_of = [&](std::vector<std::uint64_t> base, int extra) {
    base[static_cast<size_t>(extra) >> 6] |= std::uint64_t{1} << (extra & 63);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int u = 0; u < nvec; ++u) {
        if (!((base[static_cast<size_t>(u) >> 6] >> (u & 63)) & 1)) continue;
        for (int v = u; v < nvec; ++v) {
          if (!((base[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1)) continue;
          int w = vec_add(u, v);
          if (!((base[static_cast<size_t>(w) >> 6] >> (w & 63)) & 1)) {
            base[static_cast<size_t>(w) >> 6] |= std::uint64_t{1} << (w & 63);
            grew = true;
          }
        }
      }
    }
    return base;
  };

  const int words = (nvec + 63) / 64;
  std::vector<std::vector<std::uint64_t>> subs;
  std::vector<std::uint64_t> zero(words, 0);
  zero[0] |= 1;  // the zero vector has id 0
  subs.push_back(zero);
  for (size_t s = 0; s < subs.size(); ++s) {
    for (int v = 1; v < nvec; ++v) {
      if ((subs[s][static_cast<size_t>(v) >> 6] >> (v & 63)) & 1) continue;
      auto bigger = span_of(subs[s], v);
      bool known = false;
      for (const auto& t : subs)
        if (t == bigger) {
          known = true;
          break;
        }
      if (!known) {
        if (static_cast<int>(subs.size()) >= max_n)
          raise(Errc::LimitExceeded, "subspace count exceeds limit " + std::to_string(max_n));
        subs.push_back(bigger);
      }
    }
  }

  const int n = static_cast<int>(subs.size());
  FinPoset p(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool subset = true;
      for (int w = 0; w < words && subset; ++w)
        if (subs[i][w] & ~subs[j][w]) subset = false;
      if (subset) p.up.set(i, j);
    }
  return build_lattice(p, max_n);
}

}  // namespace fact
