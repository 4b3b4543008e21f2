#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etk/grp/group.hpp"

namespace etk::grp {

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, unsigned p);
bool is_p_power(std::uint64_t n, unsigned p);

Subgroup trivial_subgroup(const GroupTable& g);
Subgroup whole_group(const GroupTable& g);
/// Subgroup generated by the given element indices.
Subgroup generate(const GroupTable& g, std::vector<std::size_t> gens);
/// Subgroup with the given (closed) element set; generators chosen greedily in index order.
Subgroup from_elements(const GroupTable& g, std::vector<std::size_t> elements);

Subgroup normal_closure(const GroupTable& g, const std::vector<std::size_t>& gens);
bool is_normal(const GroupTable& g, const Subgroup& s);
bool is_subgroup_of(const Subgroup& a, const Subgroup& b);

/// {x : x^-1 S x = S}, by a full element scan testing the generators of S.
Subgroup normalizer(const GroupTable& g, const Subgroup& s);
Subgroup centralizer(const GroupTable& g, const Subgroup& s);
Subgroup center(const GroupTable& g);

/// x^-1 S x as a subgroup.
Subgroup conjugate(const GroupTable& g, const Subgroup& s, std::size_t x);

/// Sylow p-subgroup grown from a cyclic p-subgroup of maximal order through
/// successive normalizers.
Subgroup sylow(const GroupTable& g, unsigned p);

Subgroup derived_subgroup(const GroupTable& g);

/// Largest normal subgroup of order prime to p.
Subgroup o_pprime(const GroupTable& g, unsigned p);

struct ConjugacyClasses {
  std::vector<std::size_t> class_of;         // per element
  std::vector<std::size_t> representatives;  // smallest index in each class
  std::vector<std::size_t> sizes;
};
ConjugacyClasses conjugacy_classes(const GroupTable& g);

/// Every subgroup of S (|S| <= 64), sorted by (order, element list).
std::vector<Subgroup> all_subgroups(const GroupTable& g, const Subgroup& s);
/// One representative per S-conjugacy class of subgroups of S, sorted by order.
std::vector<Subgroup> subgroups_up_to_conj(const GroupTable& g, const Subgroup& s);
/// Proper subgroups of S maximal under inclusion.
std::vector<Subgroup> maximal_subgroups(const GroupTable& g, const Subgroup& s);

/// Representatives x of the left cosets xR in Q (R <= Q), smallest index first.
std::vector<std::size_t> left_coset_reps(const GroupTable& g, const Subgroup& q, const Subgroup& r);

enum class TwoGroupType { cyclic, klein_four, dihedral, semidihedral, quaternion, other };

struct TwoGroupClass {
  TwoGroupType type = TwoGroupType::other;
  std::size_t order = 0;
  std::string name() const;  // e.g. "dihedral(8)"
};

TwoGroupClass classify_2group(const GroupTable& g, const Subgroup& p);
std::string to_string(TwoGroupType t);

/// Structure of the p'-part of G/[G,G] with an explicit coordinate map.
struct AbelianQuotient {
  /// Invariant factors d_1 | d_2 | ... of the quotient (empty when trivial).
  std::vector<std::uint32_t> orders;
  /// Exponent m (1 when trivial).
  std::uint32_t exponent = 1;
  /// Per element of G, its coordinates c_i modulo orders[i].
  std::vector<std::vector<std::uint32_t>> coords;
  /// Element of G mapping to the i-th basis vector.
  std::vector<std::size_t> basis_reps;

  std::size_t size() const;
};

AbelianQuotient abelianization_pprime(const GroupTable& g, unsigned p);

/// Invariant factors of a finite abelian group from the counts |A[d]| of
/// elements x with x^d = 1, given for every d dividing the exponent.
/// count_fn(d) must return |A[d]|.
template <class CountFn>
std::vector<std::uint32_t> invariant_factors_from_counts(std::uint64_t group_order, CountFn count_fn);

}  // namespace etk::grp

#include "etk/grp/invariant_factors.ipp"
