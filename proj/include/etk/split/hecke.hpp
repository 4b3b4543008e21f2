#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "etk/modrep/module.hpp"
#include "etk/split/algebra.hpp"

namespace etk::split {

/// End_kG(lambda induced from N to G) for a linear character lambda of N.
///
/// Basis: functions f_c : G -> k supported on one lambda-good double coset
/// N x_c N, with f(n1 x n2) = lambda(n1) f(x) lambda(n2) and f_c(x_c) = 1.
/// Product: (f * h)(x) = sum_j f(x t_j^-1) h(t_j) over a right transversal.
/// Realization on the induced module: A_f[i][j] = f(t_i t_j^-1).
class HeckeEnd {
public:
  HeckeEnd(grp::GroupPtr g, const grp::SubgroupTable& n, const modrep::LinearCharacter& lambda, Field field);

  std::size_t dim() const { return good_.size(); }
  std::size_t double_coset_count() const { return reps_.size(); }
  const Algebra& algebra() const { return *algebra_; }
  const modrep::RightTransversal& transversal() const { return transversal_; }
  /// Element x_c of each good double coset, in basis order.
  std::vector<std::size_t> basis_representatives() const;

  /// Realized matrix of an algebra element (coordinates in the f_c basis).
  FMatrix realize(std::span<const Elem> x) const;
  FMatrix realize_basis(std::size_t c) const;

  /// The induced module this algebra acts on (built from the same transversal).
  const modrep::ModuleRep& induced() const { return *induced_; }

  /// Checks that realized basis elements commute with the generators and
  /// multiply according to the structure constants (random-vector tests), and
  /// that the identity coset realizes the identity.
  bool verify(std::uint64_t seed) const;

private:
  grp::GroupPtr g_;
  Field field_;
  modrep::RightTransversal transversal_;
  std::vector<std::size_t> reps_;        // all double coset representatives
  std::vector<std::size_t> good_;        // indices into reps_ of good double cosets
  std::vector<std::ptrdiff_t> basis_of_;  // per element: basis index of its coset, or -1
  std::vector<std::uint32_t> phase_;     // per element: exponent of zeta_m in f(x)
  std::uint32_t m_ = 1;
  std::optional<Algebra> algebra_;
  std::optional<modrep::ModuleRep> induced_;
  // Per transversal pair (i, j): element index of t_i t_j^-1.
  std::vector<std::size_t> pair_elem_;

  Elem value(std::size_t x) const;
};

/// Independent Mackey count: sum over (N, N) double cosets N g N of the
/// indicator that lambda(h) = lambda(g h g^-1) on N cap g^-1 N g.
std::size_t mackey_dimension(const grp::GroupTable& g, const grp::SubgroupTable& n,
                             const modrep::LinearCharacter& lambda);

}  // namespace etk::split
