#include "fact/poset.hpp"

#include <string>

#include "fact/error.hpp"

namespace fact {

FinPoset FinPoset::from_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs) {
  if (n < 0) raise(Errc::FormatError, "negative element count");
  FinPoset p(n);
  for (size_t k = 0; k < leq_pairs.size(); ++k) {
    auto [i, j] = leq_pairs[k];
    if (i < 0 || i >= n || j < 0 || j >= n)
      raise(Errc::FormatError, "pair #" + std::to_string(k) + " = (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") out of range for n = " + std::to_string(n));
    p.up.set(i, j);
  }
  // transitive closure, row-at-a-time Warshall
  for (int k = 0; k < n; ++k) {
    const std::uint64_t* rk = p.up.row(k);
    for (int i = 0; i < n; ++i) {
      if (!p.up.get(i, k)) continue;
      std::uint64_t* ri = p.up.row(i);
      for (int w = 0; w < p.up.words(); ++w) ri[w] |= rk[w];
    }
  }
  p.validate();
  return p;
}

void FinPoset::validate() const {
  for (int i = 0; i < n; ++i)
    if (!up.get(i, i)) raise(Errc::FormatError, "order not reflexive at element " + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (up.get(i, j) && up.get(j, i))
        raise(Errc::FormatError,
              "order not antisymmetric at pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (int i = 0; i < n; ++i) {
    // transitive iff up(j) subset of up(i) for every j above i
    bool ok = true;
    int bad = -1;
    up.for_each_in_row(i, [&](int j) {
      if (ok && !up.row_subset(j, i)) {
        ok = false;
        bad = j;
      }
    });
    if (!ok)
      raise(Errc::FormatError,
            "order not transitive at pair (" + std::to_string(i) + "," + std::to_string(bad) + ")");
  }
}

std::optional<int> FinPoset::minimum() const {
  for (int i = 0; i < n; ++i)
    if (up.row_count(i) == n) return i;
  return std::nullopt;
}

std::optional<int> FinPoset::maximum() const {
  BitRows down = up.transpose();
  for (int i = 0; i < n; ++i)
    if (down.row_count(i) == n) return i;
  return std::nullopt;
}

std::optional<int> FinPoset::glb(int i, int j) const {
  // lower bounds: z with z <= i and z <= j; greatest: dominates all of them
  std::vector<int> lb;
  for (int z = 0; z < n; ++z)
    if (up.get(z, i) && up.get(z, j)) lb.push_back(z);
  for (int g : lb) {
    bool greatest = true;
    for (int z : lb)
      if (!up.get(z, g)) {
        greatest = false;
        break;
      }
    if (greatest) return g;
  }
  return std::nullopt;
}

std::optional<int> FinPoset::lub(int i, int j) const {
  std::vector<int> ub;
  for (int z = 0; z < n; ++z)
    if (up.get(i, z) && up.get(j, z)) ub.push_back(z);
  for (int l : ub) {
    bool least = true;
    for (int z : ub)
      if (!up.get(l, z)) {
        least = false;
        break;
      }
    if (least) return l;
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> FinPoset::cover_pairs() const {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !up.get(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != i && k != j && up.get(i, k) && up.get(k, j)) cover = false;
      if (cover) covers.emplace_back(i, j);
    }
  return covers;
}

}  // namespace fact
