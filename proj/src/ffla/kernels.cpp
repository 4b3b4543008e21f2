#include "etk/ffla/kernels.hpp"

#include <algorithm>

#include "etk/ffla/bitmatrix.hpp"

namespace etk::ffla::kernels {

void axpy(const FieldTable& F, Elem* dst, const Elem* src, Elem c, std::size_t n) {
  if (c == 0) return;
  if (F.p() == 2 && c == 1) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
    return;
  }
  if (const Elem* mrow = F.mul_row(c)) {
    if (F.p() == 2) {
      for (std::size_t i = 0; i < n; ++i) dst[i] ^= mrow[src[i]];
    } else {
      const std::uint32_t q = F.q();
      const Elem* addt = F.add_row(0);
      for (std::size_t i = 0; i < n; ++i) dst[i] = addt[static_cast<std::size_t>(dst[i]) * q + mrow[src[i]]];
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (src[i] != 0) dst[i] = F.add(dst[i], F.mul(c, src[i]));
}

void scale_row(const FieldTable& F, Elem* dst, Elem c, std::size_t n) {
  if (c == 1) return;
  if (const Elem* mrow = F.mul_row(c)) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = mrow[dst[i]];
    return;
  }
  for (std::size_t i = 0; i < n; ++i) dst[i] = F.mul(c, dst[i]);
}

FMatrix multiply(const FMatrix& a, const FMatrix& b) {
  require_same_field(a, b, "multiply");
  if (a.cols() != b.rows()) throw MatrixError("multiply: shape mismatch");
  const auto& F = a.F();
  if (F.q() == 2 && a.rows() >= 64 && b.cols() >= 64) {
    return (BitMatrix(a) * BitMatrix(b)).to_fmatrix(a.field());
  }
  FMatrix c(a.field(), a.rows(), b.cols());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.rows());
  const std::size_t inner = a.cols();
  const std::size_t width = b.cols();
#pragma omp parallel for schedule(static) if (a.rows() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    Elem* out = c.row(static_cast<std::size_t>(i));
    const Elem* ar = a.row(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < inner; ++k)
      if (ar[k] != 0) axpy(F, out, b.row(k), ar[k], width);
  }
  return c;
}

FMatrix multiply_reference(const FMatrix& a, const FMatrix& b) {
  require_same_field(a, b, "multiply");
  if (a.cols() != b.rows()) throw MatrixError("multiply: shape mismatch");
  const auto& F = a.F();
  FMatrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Elem acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = F.add(acc, F.mul(a(i, k), b(k, j)));
      c(i, j) = acc;
    }
  return c;
}

std::vector<std::size_t> row_reduce(FMatrix& m) {
  const auto& F = m.F();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(m.row(piv), m.row(piv) + cols, m.row(r));
    scale_row(F, m.row(r) + c, F.inv(m(r, c)), cols - c);
    const Elem* prow = m.row(r);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rows);
    const std::size_t rr = r;
#pragma omp parallel for schedule(static) if (rows >= kParallelThreshold)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const std::size_t ui = static_cast<std::size_t>(i);
      if (ui == rr) continue;
      const Elem f = m(ui, c);
      if (f != 0) axpy(F, m.row(ui) + c, prow + c, F.neg(f), cols - c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> row_reduce_reference(FMatrix& m) {
  const auto& F = m.F();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Elem inv = F.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = F.mul(inv, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Elem f = m(i, c);
      if (f == 0) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace etk::ffla::kernels
