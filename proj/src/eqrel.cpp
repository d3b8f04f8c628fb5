#include "fact/eqrel.hpp"

#include <map>
#include <numeric>
#include <string>

#include "fact/error.hpp"

namespace fact {

EqRel EqRel::delta(int n) {
  EqRel r;
  r.n = n;
  r.blocks = n;
  r.block_of.resize(n);
  std::iota(r.block_of.begin(), r.block_of.end(), 0);
  return r;
}

EqRel EqRel::nabla(int n) {
  EqRel r;
  r.n = n;
  r.blocks = n > 0 ? 1 : 0;
  r.block_of.assign(n, 0);
  return r;
}

EqRel EqRel::from_labels(const std::vector<int>& labels) {
  EqRel r;
  r.n = static_cast<int>(labels.size());
  r.block_of.resize(r.n);
  std::map<int, int> remap;
  for (int i = 0; i < r.n; ++i) {
    auto [it, fresh] = remap.emplace(labels[i], static_cast<int>(remap.size()));
    r.block_of[i] = it->second;
    (void)fresh;
  }
  r.blocks = static_cast<int>(remap.size());
  return r;
}

bool EqRel::refines(const EqRel& coarser) const {
  // every block of this lies inside one block of coarser
  std::vector<int> image(blocks, -1);
  for (int i = 0; i < n; ++i) {
    int b = block_of[i];
    if (image[b] < 0)
      image[b] = coarser.block_of[i];
    else if (image[b] != coarser.block_of[i])
      return false;
  }
  return true;
}

std::string EqRel::rgs() const {
  std::string s;
  s.reserve(n);
  for (int b : block_of) s += static_cast<char>(b < 10 ? '0' + b : 'a' + b - 10);
  return s;
}

bool BinRel::is_nabla() const {
  for (int i = 0; i < n; ++i)
    if (rel.row_count(i) != n) return false;
  return true;
}

namespace {
void check_same(const EqRel& r, const EqRel& s) {
  if (r.n != s.n)
    raise(Errc::SizeMismatch,
          "relations on sets of size " + std::to_string(r.n) + " and " + std::to_string(s.n));
}
}  // namespace

EqRel rel_meet(const EqRel& r, const EqRel& s) {
  check_same(r, s);
  std::vector<int> labels(r.n);
  for (int i = 0; i < r.n; ++i) labels[i] = r.block_of[i] * (s.blocks + 1) + s.block_of[i];
  return EqRel::from_labels(labels);
}

EqRel rel_join(const EqRel& r, const EqRel& s) {
  check_same(r, s);
  std::vector<int> parent(r.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> first_r(r.blocks, -1), first_s(s.blocks, -1);
  for (int i = 0; i < r.n; ++i) {
    int& fr = first_r[r.block_of[i]];
    if (fr < 0)
      fr = i;
    else
      parent[find(i)] = find(fr);
    int& fs = first_s[s.block_of[i]];
    if (fs < 0)
      fs = i;
    else
      parent[find(i)] = find(fs);
  }
  std::vector<int> labels(r.n);
  for (int i = 0; i < r.n; ++i) labels[i] = find(i);
  return EqRel::from_labels(labels);
}

BinRel rel_compose(const EqRel& r, const EqRel& s) {
  check_same(r, s);
  BinRel out;
  out.n = r.n;
  out.rel = BitRows(r.n, r.n);
  // (x,z) iff blocks (r.block_of[x], s.block_of[z]) co-occur at some y
  BitRows pairs(r.blocks, s.blocks);
  for (int y = 0; y < r.n; ++y) pairs.set(r.block_of[y], s.block_of[y]);
  for (int x = 0; x < r.n; ++x)
    for (int z = 0; z < r.n; ++z)
      if (pairs.get(r.block_of[x], s.block_of[z])) out.rel.set(x, z);
  return out;
}

bool rel_permute(const EqRel& r, const EqRel& s) {
  return rel_compose(r, s) == rel_compose(s, r);
}

bool compose_is_nabla(const EqRel& r, const EqRel& s) {
  check_same(r, s);
  // every (r-block, s-block) pair must co-occur at some witness y
  BitRows pairs(r.blocks, s.blocks);
  for (int y = 0; y < r.n; ++y) pairs.set(r.block_of[y], s.block_of[y]);
  for (int b = 0; b < r.blocks; ++b)
    if (pairs.row_count(b) != s.blocks) return false;
  return true;
}

std::vector<EqRel> all_partitions(int n, int max_n) {
  if (n < 0) raise(Errc::UsageError, "negative set size");
  if (n > max_n)
    raise(Errc::LimitExceeded,
          "partition enumeration for n = " + std::to_string(n) + " exceeds limit " + std::to_string(max_n));
  std::vector<EqRel> out;
  std::vector<int> rgs(n, 0);
  if (n == 0) {
    out.push_back(EqRel::delta(0));
    return out;
  }
  // lexicographic restricted growth strings
  while (true) {
    out.push_back(EqRel::from_labels(rgs));
    int i = n - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
      if (rgs[i] <= mx) {
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace fact
