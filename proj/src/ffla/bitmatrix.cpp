#include "etk/ffla/bitmatrix.hpp"

#include "etk/ffla/kernels.hpp"

namespace etk::ffla {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

BitMatrix::BitMatrix(const FMatrix& m) : BitMatrix(m.rows(), m.cols()) {
  if (m.F().q() != 2) throw MatrixError("BitMatrix requires GF(2)");
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (m(r, c)) set(r, c, true);
}

FMatrix BitMatrix::to_fmatrix(Field gf2) const {
  FMatrix m(std::move(gf2), rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = get(r, c) ? 1 : 0;
  return m;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols_ != b.rows_) throw MatrixError("BitMatrix multiply: shape mismatch");
  BitMatrix c(a.rows_, b.cols_);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.rows_);
  const std::size_t w = b.words_;
#pragma omp parallel for schedule(static) if (a.rows_ >= kernels::kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    std::uint64_t* out = c.row(static_cast<std::size_t>(i));
    const std::uint64_t* ar = a.row(static_cast<std::size_t>(i));
    for (std::size_t kw = 0; kw < a.words_; ++kw) {
      std::uint64_t word = ar[kw];
      while (word) {
        const int bit = __builtin_ctzll(word);
        word &= word - 1;
        const std::uint64_t* br = b.row(kw * 64 + static_cast<std::size_t>(bit));
        for (std::size_t j = 0; j < w; ++j) out[j] ^= br[j];
      }
    }
  }
  return c;
}

std::size_t BitMatrix::rank() const {
  BitMatrix m = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && !m.get(piv, c)) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < words_; ++j) std::swap(m.row(piv)[j], m.row(r)[j]);
    for (std::size_t i = r + 1; i < rows_; ++i)
      if (m.get(i, c))
        for (std::size_t j = c / 64; j < words_; ++j) m.row(i)[j] ^= m.row(r)[j];
    ++r;
  }
  return r;
}

}  // namespace etk::ffla
