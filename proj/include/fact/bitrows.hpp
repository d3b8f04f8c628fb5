#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace fact {

/// Packed boolean matrix, one bit row per element. Backs order matrices so
/// that exhaustive scans (transitivity, bound conditions, glb/lub) run on
/// 64-bit words instead of byte tables.
class BitRows {
 public:
  BitRows() = default;
  BitRows(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(static_cast<size_t>(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words() const { return words_; }

  bool get(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1u; }
  void set(int i, int j) { row(i)[j >> 6] |= std::uint64_t{1} << (j & 63); }
  void clear(int i, int j) { row(i)[j >> 6] &= ~(std::uint64_t{1} << (j & 63)); }

  const std::uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * words_; }
  std::uint64_t* row(int i) { return bits_.data() + static_cast<size_t>(i) * words_; }

  int row_count(int i) const {
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(row(i)[w]);
    return c;
  }

  /// row i contained in row j
  bool row_subset(int i, int j) const {
    const std::uint64_t *a = row(i), *b = row(j);
    for (int w = 0; w < words_; ++w)
      if (a[w] & ~b[w]) return false;
    return true;
  }

  bool rows_equal(int i, int j) const {
    const std::uint64_t *a = row(i), *b = row(j);
    for (int w = 0; w < words_; ++w)
      if (a[w] != b[w]) return false;
    return true;
  }

  BitRows transpose() const {
    BitRows t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for_each_in_row(i, [&](int j) { t.set(j, i); });
    return t;
  }

  template <class F>
  void for_each_in_row(int i, F f) const {
    const std::uint64_t* r = row(i);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t x = r[w];
      while (x) {
        f(w * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }

  bool operator==(const BitRows& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
  }

 private:
  int rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// dst = a & b over one row's words.
inline void row_and(const std::uint64_t* a, const std::uint64_t* b, int words, std::uint64_t* dst) {
  for (int w = 0; w < words; ++w) dst[w] = a[w] & b[w];
}

inline bool buf_subset(const std::uint64_t* a, const std::uint64_t* b, int words) {
  for (int w = 0; w < words; ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

inline int buf_count(const std::uint64_t* a, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(a[w]);
  return c;
}

/// index of lowest set bit, or -1
inline int buf_first(const std::uint64_t* a, int words) {
  for (int w = 0; w < words; ++w)
    if (a[w]) return w * 64 + std::countr_zero(a[w]);
  return -1;
}

template <class F>
inline void buf_for_each(const std::uint64_t* a, int words, F f) {
  for (int w = 0; w < words; ++w) {
    std::uint64_t x = a[w];
    while (x) {
      f(w * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
}

}  // namespace fact
