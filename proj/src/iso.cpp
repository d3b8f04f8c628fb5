#include "fact/iso.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "fact/error.hpp"

namespace fact {

namespace {

std::vector<int> heights(const FinPoset& p) {
  // longest chain below each element; finite poset, so iterate to fixpoint
  std::vector<int> h(p.n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        if (i != j && p.leq(j, i) && h[j] + 1 > h[i]) {
          h[i] = h[j] + 1;
          changed = true;
        }
  }
  return h;
}

struct OmpKey {
  int height, upsize, downsize, comp_upsize;
  auto operator<=>(const OmpKey&) const = default;
};

std::vector<OmpKey> omp_keys(const OrthoPoset& p) {
  auto h = heights(p.poset);
  std::vector<OmpKey> keys(p.n());
  BitRows down = p.poset.up.transpose();
  for (int i = 0; i < p.n(); ++i)
    keys[i] = OmpKey{h[i], p.poset.up.row_count(i), down.row_count(i),
                     p.poset.up.row_count(p.comp(i))};
  return keys;
}

/// generic backtracking over a fixed variable order; `consistent(partial, x, v)`
/// checks the new assignment against all previously assigned ones
template <class Consistent, class Leaf>
bool backtrack(const std::vector<int>& order, int pos, std::vector<int>& map,
               std::vector<char>& used, const std::vector<std::vector<int>>& cands,
               Consistent&& consistent, Leaf&& leaf) {
  if (pos == static_cast<int>(order.size())) return leaf(map);
  int x = order[pos];
  for (int v : cands[x]) {
    if (used[v]) continue;
    if (!consistent(map, x, v)) continue;
    map[x] = v;
    used[v] = 1;
    if (backtrack(order, pos + 1, map, used, cands, consistent, leaf)) return true;
    used[v] = 0;
    map[x] = -1;
  }
  return false;
}

}  // namespace

bool is_omp_iso(const OrthoPoset& p, const OrthoPoset& q, const std::vector<int>& map) {
  const int n = p.n();
  if (q.n() != n || static_cast<int>(map.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int i = 0; i < n; ++i) {
    if (map[i] < 0 || map[i] >= n || hit[map[i]]) return false;
    hit[map[i]] = 1;
  }
  if (map[p.bot] != q.bot || map[p.top] != q.top) return false;
  for (int i = 0; i < n; ++i) {
    if (map[p.comp(i)] != q.comp(map[i])) return false;
    for (int j = 0; j < n; ++j)
      if (p.leq(i, j) != q.leq(map[i], map[j])) return false;
  }
  return true;
}

bool is_oa_iso(const OrthoAlgebra& a, const OrthoAlgebra& b, const std::vector<int>& map) {
  const int n = a.n;
  if (b.n != n || static_cast<int>(map.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int i = 0; i < n; ++i) {
    if (map[i] < 0 || map[i] >= n || hit[map[i]]) return false;
    hit[map[i]] = 1;
  }
  if (map[a.zero] != b.zero || map[a.one] != b.one) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a.defined(i, j) != b.defined(map[i], map[j])) return false;
      if (a.defined(i, j) && map[a.sum_of(i, j)] != b.sum_of(map[i], map[j])) return false;
    }
  return true;
}

std::optional<std::vector<int>> omp_iso(const OrthoPoset& p, const OrthoPoset& q, int max_n) {
  const int n = p.n();
  if (q.n() != n) return std::nullopt;
  if (n > max_n)
    raise(Errc::SizeLimit,
          "carrier " + std::to_string(n) + " exceeds search limit " + std::to_string(max_n));
  if (n == 0) return std::vector<int>{};

  auto kp = omp_keys(p), kq = omp_keys(q);
  std::vector<std::vector<int>> cands(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (kp[i] == kq[j]) cands[i].push_back(j);
    if (cands[i].empty()) return std::nullopt;
  }
  // variable order sorted by invariant class, then id; prunes early
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::tuple(cands[x].size(), kp[x], x) < std::tuple(cands[y].size(), kp[y], y);
  });

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto consistent = [&](const std::vector<int>& m, int x, int v) {
    if (x == p.bot && v != q.bot) return false;
    if (x == p.top && v != q.top) return false;
    int xc = p.comp(x);
    if (m[xc] >= 0 && m[xc] != q.comp(v)) return false;
    for (int y = 0; y < n; ++y) {
      if (m[y] < 0 || y == x) continue;
      if (p.leq(x, y) != q.leq(v, m[y])) return false;
      if (p.leq(y, x) != q.leq(m[y], v)) return false;
    }
    return true;
  };
  auto leaf = [&](const std::vector<int>& m) { return is_omp_iso(p, q, m); };
  if (backtrack(order, 0, map, used, cands, consistent, leaf)) return map;
  return std::nullopt;
}

std::optional<std::vector<int>> oa_iso(const OrthoAlgebra& a, const OrthoAlgebra& b, int max_n) {
  const int n = a.n;
  if (b.n != n) return std::nullopt;
  if (n > max_n)
    raise(Errc::SizeLimit,
          "carrier " + std::to_string(n) + " exceeds search limit " + std::to_string(max_n));
  if (n == 0) return std::vector<int>{};

  auto key = [](const OrthoAlgebra& o, int x) {
    int partners = 0, self = 0;
    for (int y = 0; y < o.n; ++y)
      if (o.defined(x, y)) {
        ++partners;
        if (o.sum_of(x, y) == x) ++self;
      }
    return std::tuple(partners, self, x == o.zero, x == o.one);
  };
  std::vector<std::vector<int>> cands(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (key(a, i) == key(b, j)) cands[i].push_back(j);
    if (cands[i].empty()) return std::nullopt;
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return std::tuple(cands[x].size(), x) < std::tuple(cands[y].size(), y); });

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto consistent = [&](const std::vector<int>& m, int x, int v) {
    if (x == a.zero && v != b.zero) return false;
    if (x == a.one && v != b.one) return false;
    for (int y = 0; y < n; ++y) {
      if (m[y] < 0 || y == x) continue;
      for (auto [l, r, bl, br] : {std::tuple(x, y, v, m[y]), std::tuple(y, x, m[y], v)}) {
        if (a.defined(l, r) != b.defined(bl, br)) return false;
        if (a.defined(l, r)) {
          int s = a.sum_of(l, r);
          if (m[s] >= 0 && m[s] != b.sum_of(bl, br)) return false;
        }
      }
    }
    return true;
  };
  auto leaf = [&](const std::vector<int>& m) { return is_oa_iso(a, b, m); };
  if (backtrack(order, 0, map, used, cands, consistent, leaf)) return map;
  return std::nullopt;
}

}  // namespace fact
