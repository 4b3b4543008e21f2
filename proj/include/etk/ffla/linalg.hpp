#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "etk/ffla/matrix.hpp"

namespace etk::ffla {

/// Result of deterministic Gauss-Jordan elimination.
struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero rref row
  FMatrix rref;                     // full reduced form, same shape as the input
  FMatrix kernel;                   // rows v with M v^T = 0, one per free column
};

Echelon gauss(const FMatrix& m);
std::size_t rank(const FMatrix& m);

/// Basis (as rows) of {v : M v^T = 0}.
FMatrix nullspace(const FMatrix& m);
/// Basis (as rows) of {y : y M = 0}.
FMatrix left_nullspace(const FMatrix& m);
/// Reduced echelon basis of the row space.
FMatrix row_basis(const FMatrix& m);
/// Reduced echelon basis of the column space, returned as rows.
FMatrix column_basis(const FMatrix& m);

std::optional<FMatrix> inverse(const FMatrix& m);
/// Inverse, throwing MatrixError when singular.
FMatrix invert(const FMatrix& m);

/// Some x with A x = b, if one exists.
std::optional<std::vector<Elem>> solve(const FMatrix& a, std::span<const Elem> b);

/// Intersection of two row spaces (ambient dimension equal), as a row basis.
FMatrix intersect(const FMatrix& u, const FMatrix& w);

/// Incrementally built subspace of F^n kept in semi-echelon form: every stored
/// row has a distinct pivot column holding 1 and zeros at the pivots of earlier rows.
class EchelonSpace {
public:
  EchelonSpace(Field field, std::size_t ambient);

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const Field& field() const { return field_; }

  /// Reduce v against the stored rows in place; v is zero afterwards iff v was in the span.
  void reduce(std::vector<Elem>& v) const;
  bool contains(std::span<const Elem> v) const;
  /// Adds v if it is outside the span; returns whether the dimension grew.
  bool add(std::span<const Elem> v);

  const std::vector<std::vector<Elem>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Stored rows as a matrix (semi-echelon, not reduced).
  FMatrix matrix() const;

private:
  Field field_;
  std::size_t ambient_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace etk::ffla
