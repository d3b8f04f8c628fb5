#include "fact/ring.hpp"

#include <string>

#include "fact/error.hpp"

namespace fact {

namespace {

std::string tup(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

void FinRing::validate() const {
  if (n <= 0) raise(Errc::FormatError, "empty carrier");
  for (int a = 0; a < n; ++a) {
    if (add_of(a, zero) != a) raise(Errc::FormatError, "zero is not additive identity at " + tup({a}));
    if (add_of(a, neg[a]) != zero) raise(Errc::FormatError, "neg fails at " + tup({a}));
    if (mul_of(a, one) != a || mul_of(one, a) != a)
      raise(Errc::FormatError, "one is not a two-sided unit at " + tup({a}));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add_of(a, b) != add_of(b, a))
        raise(Errc::FormatError, "addition not commutative at " + tup({a, b}));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (add_of(add_of(a, b), c) != add_of(a, add_of(b, c)))
          raise(Errc::FormatError, "addition not associative at " + tup({a, b, c}));
        if (mul_of(mul_of(a, b), c) != mul_of(a, mul_of(b, c)))
          raise(Errc::FormatError, "multiplication not associative at " + tup({a, b, c}));
        if (mul_of(a, add_of(b, c)) != add_of(mul_of(a, b), mul_of(a, c)))
          raise(Errc::FormatError, "left distributivity fails at " + tup({a, b, c}));
        if (mul_of(add_of(a, b), c) != add_of(mul_of(a, c), mul_of(b, c)))
          raise(Errc::FormatError, "right distributivity fails at " + tup({a, b, c}));
      }
}

FinRing make_ring(int n, std::vector<int> add, std::vector<int> mul, int zero, int one) {
  if (n <= 0) raise(Errc::FormatError, "empty carrier");
  if (static_cast<int>(add.size()) != n * n || static_cast<int>(mul.size()) != n * n)
    raise(Errc::FormatError, "table shape is not n x n");
  for (int v : add)
    if (v < 0 || v >= n) raise(Errc::FormatError, "addition table value " + std::to_string(v) + " out of range");
  for (int v : mul)
    if (v < 0 || v >= n) raise(Errc::FormatError, "multiplication table value " + std::to_string(v) + " out of range");
  if (zero < 0 || zero >= n || one < 0 || one >= n) raise(Errc::FormatError, "constant out of range");
  FinRing r;
  r.n = n;
  r.add = std::move(add);
  r.mul = std::move(mul);
  r.zero = zero;
  r.one = one;
  r.neg.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (r.add_of(a, b) == zero) {
        if (r.neg[a] >= 0) raise(Errc::FormatError, "element " + std::to_string(a) + " has two negatives");
        r.neg[a] = b;
      }
    if (r.neg[a] < 0) raise(Errc::FormatError, "element " + std::to_string(a) + " has no negative");
  }
  r.validate();
  return r;
}

FinRing zn_ring(int n, int max_n) {
  if (n < 1) raise(Errc::UsageError, "modulus must be positive");
  if (n > max_n) raise(Errc::LimitExceeded, "carrier " + std::to_string(n) + " exceeds limit");
  FinRing r;
  r.n = n;
  r.zero = 0;
  r.one = n == 1 ? 0 : 1;
  r.add.resize(static_cast<size_t>(n) * n);
  r.mul.resize(static_cast<size_t>(n) * n);
  r.neg.resize(n);
  for (int a = 0; a < n; ++a) {
    r.neg[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) {
      r.add[static_cast<size_t>(a) * n + b] = (a + b) % n;
      r.mul[static_cast<size_t>(a) * n + b] = (a * b) % n;
    }
  }
  return r;
}

FinRing product_ring(const std::vector<FinRing>& factors, int max_n) {
  if (factors.empty()) raise(Errc::UsageError, "empty factor list");
  long long total = 1;
  for (const FinRing& f : factors) {
    total *= f.n;
    if (total > max_n) raise(Errc::LimitExceeded, "product carrier exceeds limit");
  }
  const int n = static_cast<int>(total);
  const int k = static_cast<int>(factors.size());
  auto split = [&](int id) {
    std::vector<int> t(k);
    for (int i = k - 1; i >= 0; --i) {
      t[i] = id % factors[i].n;
      id /= factors[i].n;
    }
    return t;
  };
  auto fuse = [&](const std::vector<int>& t) {
    int id = 0;
    for (int i = 0; i < k; ++i) id = id * factors[i].n + t[i];
    return id;
  };
  FinRing r;
  r.n = n;
  r.add.resize(static_cast<size_t>(n) * n);
  r.mul.resize(static_cast<size_t>(n) * n);
  r.neg.resize(n);
  std::vector<int> zt(k), ot(k);
  for (int i = 0; i < k; ++i) {
    zt[i] = factors[i].zero;
    ot[i] = factors[i].one;
  }
  r.zero = fuse(zt);
  r.one = fuse(ot);
  for (int a = 0; a < n; ++a) {
    auto ta = split(a);
    std::vector<int> tn(k);
    for (int i = 0; i < k; ++i) tn[i] = factors[i].neg_of(ta[i]);
    r.neg[a] = fuse(tn);
    for (int b = 0; b < n; ++b) {
      auto tb = split(b);
      std::vector<int> ts(k), tm(k);
      for (int i = 0; i < k; ++i) {
        ts[i] = factors[i].add_of(ta[i], tb[i]);
        tm[i] = factors[i].mul_of(ta[i], tb[i]);
      }
      r.add[static_cast<size_t>(a) * n + b] = fuse(ts);
      r.mul[static_cast<size_t>(a) * n + b] = fuse(tm);
    }
  }
  return r;
}

FinRing matrix_ring(int k, int q, int max_n) {
  if (k < 1 || k > 3) raise(Errc::UsageError, "matrix size " + std::to_string(k) + " not in 1..3");
  if (q != 2 && q != 3 && q != 5 && q != 7)
    raise(Errc::UsageError, "field order " + std::to_string(q) + " not supported (prime <= 7)");
  long long total = 1;
  for (int i = 0; i < k * k; ++i) {
    total *= q;
    if (total > max_n) raise(Errc::LimitExceeded, "matrix ring carrier exceeds limit");
  }
  const int n = static_cast<int>(total);
  auto entry = [&](int id, int cell) {
    for (int i = 0; i < cell; ++i) id /= q;
    return id % q;
  };
  FinRing r;
  r.n = n;
  r.zero = 0;
  r.add.resize(static_cast<size_t>(n) * n);
  r.mul.resize(static_cast<size_t>(n) * n);
  r.neg.resize(n);
  {
    int id = 0, pw = 1;
    for (int cell = 0; cell < k * k; ++cell) {
      int row = cell / k, col = cell % k;
      if (row == col) id += pw;
      pw *= q;
    }
    r.one = id;
  }
  for (int a = 0; a < n; ++a) {
    int nid = 0, pw = 1;
    for (int cell = 0; cell < k * k; ++cell) {
      nid += ((q - entry(a, cell)) % q) * pw;
      pw *= q;
    }
    r.neg[a] = nid;
    for (int b = 0; b < n; ++b) {
      int sid = 0, mid = 0;
      pw = 1;
      for (int cell = 0; cell < k * k; ++cell) {
        int row = cell / k, col = cell % k;
        sid += ((entry(a, cell) + entry(b, cell)) % q) * pw;
        int dot = 0;
        for (int t = 0; t < k; ++t) dot += entry(a, row * k + t) * entry(b, t * k + col);
        mid += (dot % q) * pw;
        pw *= q;
      }
      r.add[static_cast<size_t>(a) * n + b] = sid;
      r.mul[static_cast<size_t>(a) * n + b] = mid;
    }
  }
  return r;
}

}  // namespace fact
