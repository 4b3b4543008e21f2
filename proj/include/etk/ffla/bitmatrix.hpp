#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "etk/ffla/matrix.hpp"

namespace etk::ffla {

/// GF(2) matrix packed 64 entries per word, rows padded to whole words.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  explicit BitMatrix(const FMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    auto& w = bits_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    w = v ? (w | mask) : (w & ~mask);
  }
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }

  FMatrix to_fmatrix(Field gf2) const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  bool operator==(const BitMatrix&) const = default;

  /// Rank by elimination on packed rows.
  std::size_t rank() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace etk::ffla
