#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "etk/grp/element.hpp"

namespace etk::grp {

inline constexpr std::size_t kDefaultGroupCap = 20000;

/// A fully enumerated finite group. Elements are indexed 0..|G|-1 in
/// breadth-first order from the generators; index 0 is the identity.
/// Immutable after construction.
class GroupTable {
public:
  static GroupTable enumerate(std::vector<GElement> generators, std::size_t cap = kDefaultGroupCap);

  std::size_t order() const { return elements_.size(); }
  std::size_t num_generators() const { return generators_.size(); }
  /// Element index of generator s.
  std::size_t generator(std::size_t s) const { return generators_[s]; }
  const std::vector<std::size_t>& generators() const { return generators_; }

  const GElement& element(std::size_t i) const { return elements_[i]; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  /// a^-1 b a
  std::size_t conj(std::size_t b, std::size_t a) const { return mul(inv(a), mul(b, a)); }
  std::size_t power(std::size_t a, std::uint64_t k) const;
  /// Index of g*generator(s), precomputed.
  std::size_t right_mul_gen(std::size_t a, std::size_t s) const { return cayley_[a * generators_.size() + s]; }

  /// Index of an element, or npos if it is not in the group.
  std::size_t find(const GElement& g) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Generator positions s_1..s_k with element = gen(s_1) * ... * gen(s_k).
  std::vector<std::size_t> word(std::size_t i) const;

  std::size_t element_order(std::size_t i) const { return orders_[i]; }

  GElement::Kind kind() const { return elements_.front().kind(); }

private:
  std::vector<GElement> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> cayley_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_gen_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> orders_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Subgroup of a parent GroupTable: sorted element indices plus generators.
struct Subgroup {
  std::vector<std::size_t> elements;
  std::vector<std::size_t> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(std::size_t g) const;
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

/// A subgroup re-enumerated as a group in its own right, with index maps.
struct SubgroupTable {
  GroupPtr table;
  std::vector<std::size_t> to_parent;     // sub index -> parent index
  std::vector<std::ptrdiff_t> from_parent;  // parent index -> sub index or -1
  Subgroup in_parent;

  std::size_t parent_index(std::size_t sub) const { return to_parent[sub]; }
  std::ptrdiff_t sub_index(std::size_t parent) const { return from_parent[parent]; }
};

SubgroupTable make_subgroup_table(const GroupTable& g, const Subgroup& s);

}  // namespace etk::grp
