#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "etk/ffla/field.hpp"

namespace etk::ffla {

class MatrixError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix over one FieldTable.
class FMatrix {
public:
  FMatrix() = default;
  FMatrix(Field field, std::size_t rows, std::size_t cols);
  FMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static FMatrix identity(Field field, std::size_t n);
  static FMatrix scalar(Field field, std::size_t n, Elem c);

  const Field& field() const { return field_; }
  const FieldTable& F() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool square() const { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem* row(std::size_t r) { return data_.data() + r * cols_; }
  const Elem* row(std::size_t r) const { return data_.data() + r * cols_; }
  std::span<const Elem> row_span(std::size_t r) const { return {row(r), cols_}; }
  std::vector<Elem> row_vector(std::size_t r) const { return {row(r), row(r) + cols_}; }
  const std::vector<Elem>& data() const { return data_; }
  std::vector<Elem>& data() { return data_; }

  bool operator==(const FMatrix& other) const;
  bool is_zero() const;
  bool is_identity() const;

  FMatrix transpose() const;
  Elem trace() const;

  /// Rows [r0, r0+n) as a new matrix.
  FMatrix row_range(std::size_t r0, std::size_t n) const;
  FMatrix select_rows(std::span<const std::size_t> idx) const;
  FMatrix select_cols(std::span<const std::size_t> idx) const;
  void append_row(std::span<const Elem> v);

private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

FMatrix operator*(const FMatrix& a, const FMatrix& b);
FMatrix operator+(const FMatrix& a, const FMatrix& b);
FMatrix operator-(const FMatrix& a, const FMatrix& b);
FMatrix scale(const FMatrix& a, Elem c);

/// Kronecker product; rows(a)*rows(b) by cols(a)*cols(b).
FMatrix kron(const FMatrix& a, const FMatrix& b);

FMatrix vstack(const FMatrix& top, const FMatrix& bottom);

/// Row vector times matrix: v * M.
std::vector<Elem> vec_mul(std::span<const Elem> v, const FMatrix& m);
/// Matrix times column vector: M * v.
std::vector<Elem> mul_vec(const FMatrix& m, std::span<const Elem> v);

void require_same_field(const FMatrix& a, const FMatrix& b, const char* what);

}  // namespace etk::ffla
