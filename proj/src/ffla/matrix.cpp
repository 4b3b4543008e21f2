#include "etk/ffla/matrix.hpp"

#include <algorithm>

#include "etk/ffla/kernels.hpp"

namespace etk::ffla {

void require_same_field(const FMatrix& a, const FMatrix& b, const char* what) {
  if (!same_field(a.field(), b.field()))
    throw MatrixError(std::string(what) + ": field mismatch");
}

FMatrix::FMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FMatrix::FMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw MatrixError("entry count does not match shape");
  for (Elem x : data_)
    if (x >= field_->q()) throw MatrixError("entry is not a field element");
}

FMatrix FMatrix::identity(Field field, std::size_t n) { return scalar(std::move(field), n, 1); }

FMatrix FMatrix::scalar(Field field, std::size_t n, Elem c) {
  FMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

bool FMatrix::operator==(const FMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_ &&
         (data_.empty() || same_field(field_, other.field_));
}

bool FMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool FMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

FMatrix FMatrix::transpose() const {
  FMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Elem FMatrix::trace() const {
  if (!square()) throw MatrixError("trace of non-square matrix");
  Elem t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t = field_->add(t, (*this)(i, i));
  return t;
}

FMatrix FMatrix::row_range(std::size_t r0, std::size_t n) const {
  if (r0 + n > rows_) throw MatrixError("row range out of bounds");
  return FMatrix(field_, n, cols_,
                 std::vector<Elem>(data_.begin() + r0 * cols_, data_.begin() + (r0 + n) * cols_));
}

FMatrix FMatrix::select_rows(std::span<const std::size_t> idx) const {
  FMatrix out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) std::copy_n(row(idx[i]), cols_, out.row(i));
  return out;
}

FMatrix FMatrix::select_cols(std::span<const std::size_t> idx) const {
  FMatrix out(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
  return out;
}

void FMatrix::append_row(std::span<const Elem> v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw MatrixError("append_row: length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

FMatrix operator*(const FMatrix& a, const FMatrix& b) { return kernels::multiply(a, b); }

FMatrix operator+(const FMatrix& a, const FMatrix& b) {
  require_same_field(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw MatrixError("add: shape mismatch");
  FMatrix c = a;
  const auto& F = a.F();
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = F.add(c.data()[i], b.data()[i]);
  return c;
}

FMatrix operator-(const FMatrix& a, const FMatrix& b) {
  require_same_field(a, b, "sub");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw MatrixError("sub: shape mismatch");
  FMatrix c = a;
  const auto& F = a.F();
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = F.sub(c.data()[i], b.data()[i]);
  return c;
}

FMatrix scale(const FMatrix& a, Elem c) {
  FMatrix out = a;
  for (auto& x : out.data()) x = a.F().mul(x, c);
  return out;
}

FMatrix kron(const FMatrix& a, const FMatrix& b) {
  require_same_field(a, b, "kron");
  const auto& F = a.F();
  FMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Elem x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        Elem* dst = out.row(i * b.rows() + k) + j * b.cols();
        const Elem* src = b.row(k);
        for (std::size_t l = 0; l < b.cols(); ++l) dst[l] = F.mul(x, src[l]);
      }
    }
  return out;
}

FMatrix vstack(const FMatrix& top, const FMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  require_same_field(top, bottom, "vstack");
  if (top.cols() != bottom.cols()) throw MatrixError("vstack: column mismatch");
  std::vector<Elem> d = top.data();
  d.insert(d.end(), bottom.data().begin(), bottom.data().end());
  return FMatrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(d));
}

std::vector<Elem> vec_mul(std::span<const Elem> v, const FMatrix& m) {
  if (v.size() != m.rows()) throw MatrixError("vec_mul: length mismatch");
  std::vector<Elem> out(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) kernels::axpy(m.F(), out.data(), m.row(k), v[k], m.cols());
  return out;
}

std::vector<Elem> mul_vec(const FMatrix& m, std::span<const Elem> v) {
  if (v.size() != m.cols()) throw MatrixError("mul_vec: length mismatch");
  const auto& F = m.F();
  std::vector<Elem> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Elem acc = 0;
    const Elem* r = m.row(i);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (r[k] != 0 && v[k] != 0) acc = F.add(acc, F.mul(r[k], v[k]));
    out[i] = acc;
  }
  return out;
}

}  // namespace etk::ffla
