#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "etk/ffla/matrix.hpp"

namespace etk::split {

using ffla::Elem;
using ffla::Field;
using ffla::FMatrix;
using Vec = std::vector<Elem>;

class SplitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a randomized splitting step exhausts its trial budget, which
/// indicates that the field is too small to split the algebra or module.
class FieldTooSmall : public SplitError {
public:
  FieldTooSmall(const std::string& what, unsigned degree_hint)
      : SplitError(what), degree_hint_(degree_hint < 2 ? 2 : degree_hint) {}
  /// Degree of a field extension that is expected to resolve the failure.
  unsigned degree_hint() const { return degree_hint_; }

private:
  unsigned degree_hint_;
};

/// Finite-dimensional associative unital algebra over a finite field, given
/// by structure constants: left[i] is the matrix of y -> b_i y on coordinate
/// columns, so b_i b_j = left[i] * e_j.
class Algebra {
public:
  Algebra(Field field, std::vector<FMatrix> left, Vec one);

  /// Algebra spanned by a list of square matrices closed under products
  /// (the span must contain the identity).
  static Algebra from_matrices(const std::vector<FMatrix>& basis);

  const Field& field() const { return field_; }
  std::size_t dim() const { return left_.size(); }
  const Vec& one() const { return one_; }
  const FMatrix& left(std::size_t i) const { return left_[i]; }

  Vec mul(std::span<const Elem> x, std::span<const Elem> y) const;
  Vec add(std::span<const Elem> x, std::span<const Elem> y) const;
  Vec sub(std::span<const Elem> x, std::span<const Elem> y) const;
  Vec scale(std::span<const Elem> x, Elem c) const;
  Vec basis_vector(std::size_t i) const;
  /// Matrix of y -> x y.
  FMatrix left_matrix(std::span<const Elem> x) const;
  /// Matrix of y -> y x.
  FMatrix right_matrix(std::span<const Elem> x) const;
  bool is_zero(std::span<const Elem> x) const;
  Vec random_element(std::mt19937_64& rng) const;

  /// Associativity and unit checks on all basis triples.
  bool check_axioms() const;

private:
  Field field_;
  std::vector<FMatrix> left_;
  Vec one_;
};

/// Row basis of span{x b y : b in basis} for fixed x, y (e.g. corners eAf).
FMatrix sandwich_span(const Algebra& a, std::span<const Elem> x, std::span<const Elem> y);

/// Jacobson radical as a row basis, by the characteristic-p trace chain over
/// the prime field (restriction of scalars). Limited to dim <= 64.
FMatrix radical(const Algebra& a);

/// Orthogonal primitive idempotents summing to one, by Fitting splits of
/// random corner elements (the corner radical is computed on demand). Each corner eAe is certified local and split:
/// dim eAe - dim eJe = 1. Throws FieldTooSmall after `trial_cap` failed
/// attempts on one corner.
struct IdempotentResult {
  std::vector<Vec> idempotents;
  std::vector<std::size_t> corner_dims;  // dim eAe
  std::vector<std::size_t> corner_radical_dims;  // dim eJe
};
IdempotentResult primitive_idempotents(const Algebra& a, std::uint64_t seed, int trial_cap = 64);

/// True when e_i A e_j A e_i is not contained in J, i.e. the summands e_i A
/// and e_j A are isomorphic.
bool idempotents_equivalent(const Algebra& a, std::span<const Elem> ei, std::span<const Elem> ej);

}  // namespace etk::split
