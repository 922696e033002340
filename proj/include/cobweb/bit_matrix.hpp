#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace cobweb {

// Square boolean matrix packed into row-major 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
    assert(n >= 0);
  }

  int size() const noexcept { return n_; }

  bool get(int row, int col) const {
    assert(in_range(row, col));
    return (bits_[word_index(row, col)] >> (col & 63)) & 1u;
  }

  void set(int row, int col) {
    assert(in_range(row, col));
    bits_[word_index(row, col)] |= std::uint64_t{1} << (col & 63);
  }

  // row[dst] |= row[src]
  void or_row_into(int src, int dst) {
    const std::size_t s = static_cast<std::size_t>(src) * words_;
    const std::size_t d = static_cast<std::size_t>(dst) * words_;
    for (int w = 0; w < words_; ++w) bits_[d + w] |= bits_[s + w];
  }

  // true iff row a of x and row b of y share a set bit
  static bool rows_intersect(const BitMatrix& x, int a, const BitMatrix& y, int b) {
    assert(x.words_ == y.words_);
    const std::size_t ra = static_cast<std::size_t>(a) * x.words_;
    const std::size_t rb = static_cast<std::size_t>(b) * y.words_;
    for (int w = 0; w < x.words_; ++w)
      if (x.bits_[ra + w] & y.bits_[rb + w]) return true;
    return false;
  }

  // true iff row a of x is contained in row b of y
  static bool row_subset(const BitMatrix& x, int a, const BitMatrix& y, int b) {
    assert(x.words_ == y.words_);
    const std::size_t ra = static_cast<std::size_t>(a) * x.words_;
    const std::size_t rb = static_cast<std::size_t>(b) * y.words_;
    for (int w = 0; w < x.words_; ++w)
      if (x.bits_[ra + w] & ~y.bits_[rb + w]) return false;
    return true;
  }

  bool operator==(const BitMatrix&) const = default;

 private:
  bool in_range(int row, int col) const {
    return row >= 0 && row < n_ && col >= 0 && col < n_;
  }
  std::size_t word_index(int row, int col) const {
    return static_cast<std::size_t>(row) * words_ + (col >> 6);
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace cobweb
