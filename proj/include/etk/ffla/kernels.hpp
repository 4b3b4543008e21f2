#pragma once

// Hot loops of the linear algebra layer. Each kernel has an OpenMP-parallel
// version (used by the library) and a plain serial reference built only from
// FieldTable::add / FieldTable::mul, kept for tests and benchmarks. Results are
// exact, so both paths must agree entry for entry.

#include <cstddef>

#include "etk/ffla/field.hpp"
#include "etk/ffla/matrix.hpp"

namespace etk::ffla::kernels {

/// dst[0..n) += c * src[0..n)
void axpy(const FieldTable& F, Elem* dst, const Elem* src, Elem c, std::size_t n);
/// dst[0..n) *= c
void scale_row(const FieldTable& F, Elem* dst, Elem c, std::size_t n);

FMatrix multiply(const FMatrix& a, const FMatrix& b);
FMatrix multiply_reference(const FMatrix& a, const FMatrix& b);

/// In-place reduced row echelon form with leftmost pivots; returns pivot columns.
std::vector<std::size_t> row_reduce(FMatrix& m);
std::vector<std::size_t> row_reduce_reference(FMatrix& m);

/// Number of rows above which the parallel kernels fork threads.
inline constexpr std::size_t kParallelThreshold = 48;

}  // namespace etk::ffla::kernels
