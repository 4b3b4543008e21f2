#pragma once

#include <span>
#include <vector>

#include "etk/modrep/module.hpp"

namespace etk::modrep {

/// Basis (rows) of M^Q, the common fixed space of the generators of Q.
FMatrix fixed_points(const ModuleRep& m, const grp::Subgroup& q);

/// Sum of rho(x) over representatives x of the left cosets of R in Q.
FMatrix relative_trace_matrix(const ModuleRep& m, const grp::Subgroup& q, const grp::Subgroup& r);

struct BrauerQuotient {
  std::size_t dim = 0;
  FMatrix fixed;       // basis of M^Q
  FMatrix traces;      // basis of the sum of tr_R^Q(M^R) over maximal R < Q
  FMatrix complement;  // rows completing traces to a basis of M^Q
  /// Action of each requested normalizing element on M(Q), in the complement basis.
  std::vector<FMatrix> actions;
};

/// M(Q) = M^Q / sum over maximal R < Q of tr_R^Q(M^R), for a p-subgroup Q
/// (p the field characteristic). The elements in `acting` must normalize Q.
BrauerQuotient brauer_quotient(const ModuleRep& m, const grp::Subgroup& q,
                               std::span<const std::size_t> acting = {});

/// counts[j] = number of Jordan blocks of size j of rho(u), for a p-element u.
std::vector<std::size_t> jordan_profile(const ModuleRep& m, std::size_t u);

}  // namespace etk::modrep
