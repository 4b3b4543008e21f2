#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "etk/ffla/matrix.hpp"
#include "etk/grp/group.hpp"
#include "etk/modrep/character.hpp"

namespace etk::modrep {

using ffla::FMatrix;

class ModuleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A representation rho of a finite group on F^d, given by one invertible
/// matrix per group generator, with rho(gh) = rho(g) rho(h) and vectors
/// acted on as columns. Other elements are evaluated through generator words.
class ModuleRep {
public:
  ModuleRep(GroupPtr group, Field field, std::size_t dim, std::vector<FMatrix> gens);

  const GroupPtr& group() const { return group_; }
  const grp::GroupTable& G() const { return *group_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const FMatrix& gen(std::size_t s) const { return gens_[s]; }
  const std::vector<FMatrix>& generators() const { return gens_; }

  /// rho(g) for an element index g.
  FMatrix act(std::size_t g) const;
  /// rho(g) v for a column vector v.
  std::vector<Elem> act_vec(std::size_t g, std::span<const Elem> v) const;

  /// Replaces word evaluation by a direct formula for rho(g), e.g. a Kronecker
  /// product of the factors' matrices for a tensor product.
  void set_evaluator(std::function<FMatrix(std::size_t)> eval) { eval_ = std::move(eval); }

  /// Checks rho(a) rho(b) v = rho(ab) v on random a, b, v; true when all pass.
  bool check_relations(std::uint64_t seed, int trials = 10) const;

private:
  GroupPtr group_;
  Field field_;
  std::size_t dim_;
  std::vector<FMatrix> gens_;
  std::function<FMatrix(std::size_t)> eval_;
};

ModuleRep trivial_module(GroupPtr g, Field f);
ModuleRep one_dim_module(const LinearCharacter& lambda, Field f);

/// Natural permutation module of a permutation group on its points;
/// dim M^Q is the number of Q-orbits.
ModuleRep permutation_module(GroupPtr g, Field f);

/// Right cosets N t of a subgroup, each represented by its smallest element.
struct RightTransversal {
  std::vector<std::size_t> reps;      // t_0 = identity, t_1, ...
  std::vector<std::size_t> coset_of;  // per element g of G: i with g in N t_i
  /// n in N (parent index) with g = n t_{coset_of[g]}.
  std::size_t n_part(const grp::GroupTable& g, std::size_t x) const {
    return g.mul(x, g.inv(reps[coset_of[x]]));
  }
};

RightTransversal right_transversal(const grp::GroupTable& g, const grp::Subgroup& n);

/// M induced from a subgroup N to G. M must be a module for the re-enumerated
/// subgroup table n.table; generator s of G acts by the block matrix with
/// block (i, j) = M(n) when t_i s = n t_j.
ModuleRep induce(const ModuleRep& m, GroupPtr g, const grp::SubgroupTable& n, const RightTransversal& t);
ModuleRep induce(const ModuleRep& m, GroupPtr g, const grp::SubgroupTable& n);

/// Restriction to a subgroup, expressed on the re-enumerated table s.table.
ModuleRep restrict(const ModuleRep& m, const grp::SubgroupTable& s);
ModuleRep tensor(const ModuleRep& a, const ModuleRep& b);
ModuleRep dual(const ModuleRep& m);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

/// Same module with every matrix mapped into a larger field through emb.
ModuleRep extend_scalars(const ModuleRep& m, const ffla::FieldEmbedding& emb);

/// Submodule spanned by the rows of basis (an invariant subspace), with the
/// action written in that basis.
ModuleRep submodule(const ModuleRep& m, const FMatrix& basis);
/// Quotient of m by the invariant subspace spanned by the rows of basis.
ModuleRep quotient_module(const ModuleRep& m, const FMatrix& basis);

}  // namespace etk::modrep
