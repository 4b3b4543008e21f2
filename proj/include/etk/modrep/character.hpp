#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "etk/ffla/field.hpp"
#include "etk/grp/algorithms.hpp"

namespace etk::modrep {

using ffla::Elem;
using ffla::Field;
using grp::GroupPtr;

/// The group X(G) of p'-order linear characters of G, described through the
/// p'-abelianization: characters are tuples a with a_i mod d_i, and
///   lambda_a(g) = zeta_m ^ (sum_i a_i (m / d_i) c_i(g)),
/// where c(g) are the abelianization coordinates and zeta_m = root_of_unity(m).
struct XStructure {
  GroupPtr group;
  unsigned p = 0;
  grp::AbelianQuotient ab;

  static std::shared_ptr<const XStructure> make(GroupPtr g, unsigned p);
  std::uint32_t exponent() const { return ab.exponent; }
  std::size_t size() const { return ab.size(); }
};

using XPtr = std::shared_ptr<const XStructure>;

class LinearCharacter {
public:
  LinearCharacter(XPtr x, std::vector<std::uint32_t> a);
  static LinearCharacter trivial(XPtr x);

  const XPtr& structure() const { return x_; }
  const GroupPtr& group() const { return x_->group; }
  const std::vector<std::uint32_t>& coords() const { return a_; }

  /// k with lambda(g) = zeta_m^k, 0 <= k < m.
  std::uint32_t exponent_at(std::size_t g) const;
  Elem value(std::size_t g, const ffla::FieldTable& f) const;
  std::uint32_t order() const;
  bool is_trivial() const;

  LinearCharacter operator*(const LinearCharacter& o) const;
  LinearCharacter inverse() const;
  bool operator==(const LinearCharacter& o) const { return a_ == o.a_ && x_ == o.x_; }
  bool operator<(const LinearCharacter& o) const { return a_ < o.a_; }

private:
  XPtr x_;
  std::vector<std::uint32_t> a_;
};

/// Every element of X(G), in lexicographic order of coordinates (trivial first).
std::vector<LinearCharacter> all_characters(const XPtr& x);

/// Index of lambda within all_characters().
std::size_t character_index(const LinearCharacter& lambda);

}  // namespace etk::modrep
