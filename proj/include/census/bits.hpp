#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace census {

using word = std::uint64_t;
inline constexpr int kWordBits = 64;

namespace bits {

inline int words_for(int nbits) { return (nbits + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const word> w, int i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1u;
}
inline void set(std::span<word> w, int i) { w[i / kWordBits] |= word{1} << (i % kWordBits); }
inline void reset(std::span<word> w, int i) { w[i / kWordBits] &= ~(word{1} << (i % kWordBits)); }

inline int popcount(std::span<const word> a) {
  int c = 0;
  for (word x : a) c += std::popcount(x);
  return c;
}

inline int popcount_and(std::span<const word> a, std::span<const word> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

inline int popcount_and3(std::span<const word> a, std::span<const word> b,
                         std::span<const word> c) {
  int r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += std::popcount(a[i] & b[i] & c[i]);
  return r;
}

inline bool any_and(std::span<const word> a, std::span<const word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

// Index of the lowest set bit, or -1.
inline int first_bit(std::span<const word> a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) return int(i) * kWordBits + std::countr_zero(a[i]);
  return -1;
}

inline int first_bit_and(std::span<const word> a, std::span<const word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    word x = a[i] & b[i];
    if (x) return int(i) * kWordBits + std::countr_zero(x);
  }
  return -1;
}

// First bit of a that is NOT in b, or -1.
inline int first_bit_andnot(std::span<const word> a, std::span<const word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    word x = a[i] & ~b[i];
    if (x) return int(i) * kWordBits + std::countr_zero(x);
  }
  return -1;
}

template <typename F>
inline void for_each_bit(std::span<const word> a, F&& f) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    word x = a[i];
    while (x) {
      f(int(i) * kWordBits + std::countr_zero(x));
      x &= x - 1;
    }
  }
}

}  // namespace bits

// Dynamic bit vector over n bits.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), w_(bits::words_for(n), 0) {}

  int size() const { return n_; }
  bool test(int i) const { return bits::test(w_, i); }
  void set(int i) { bits::set(w_, i); }
  void reset(int i) { bits::reset(w_, i); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }
  int count() const { return bits::popcount(w_); }
  std::span<word> words() { return w_; }
  std::span<const word> words() const { return w_; }

  // Set bits [0, n) and clear any tail bits beyond n.
  void fill_all() {
    std::fill(w_.begin(), w_.end(), ~word{0});
    trim();
  }
  void trim() {
    int tail = n_ % kWordBits;
    if (tail && !w_.empty()) w_.back() &= (word{1} << tail) - 1;
  }

 private:
  int n_ = 0;
  std::vector<word> w_;
};

// Dense bit matrix; row i is a bit vector of `cols` bits.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        words_(bits::words_for(cols)),
        data_(std::size_t(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return words_; }

  std::span<word> row(int i) { return {data_.data() + std::size_t(i) * words_, std::size_t(words_)}; }
  std::span<const word> row(int i) const {
    return {data_.data() + std::size_t(i) * words_, std::size_t(words_)};
  }

  bool test(int i, int j) const { return bits::test(row(i), j); }
  void set(int i, int j) { bits::set(row(i), j); }
  void reset(int i, int j) { bits::reset(row(i), j); }

  bool operator==(const BitMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<word> data_;
};

}  // namespace census
