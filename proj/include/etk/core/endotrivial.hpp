#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etk/modrep/brauer.hpp"
#include "etk/split/decompose.hpp"

namespace etk::core {

using ffla::Field;
using modrep::LinearCharacter;
using modrep::ModuleRep;

class EtkError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Index in all_characters(xn) of the restriction of mu (a character of G)
/// to the subgroup n, compared exactly as fractions of a full turn.
std::size_t restrict_character(const LinearCharacter& mu, const grp::SubgroupTable& n, const modrep::XPtr& xn);

/// The Sylow data shared by every lambda: P, N = N_G(P) and its table.
struct SylowData {
  unsigned prime = 2;
  grp::Subgroup p;
  grp::Subgroup n;
  grp::SubgroupTable n_table;
  grp::TwoGroupClass type;
  /// Nontrivial cyclic subgroups of P up to P-conjugacy, by order.
  std::vector<grp::Subgroup> cyclic;
  /// Nontrivial subgroups of P up to P-conjugacy, by order.
  std::vector<grp::Subgroup> nontrivial;
};
SylowData sylow_data(const grp::GroupTable& g, unsigned p);

struct Correspondent {
  split::Decomposition decomposition;
  std::size_t index = 0;  // summand with nonzero Brauer quotient at P
  std::size_t hecke_dim = 0;
  std::size_t induced_dim = 0;

  const ModuleRep& module() const { return decomposition.summands[index].module; }
};

/// Green correspondent of lambda: the unique summand U of lambda induced to G
/// with U(P) != 0. Throws EtkError when zero or several summands qualify.
Correspondent green_correspondent(const split::HeckeEnd& h, const grp::Subgroup& p, std::uint64_t seed);

struct CharTest {
  bool endotrivial = false;
  std::vector<std::size_t> witness;  // dim U(<u>) per cyclic class
};
/// dim U(<u>) = 1 for every nontrivial cyclic <u> <= P, up to P-conjugacy.
CharTest is_endotrivial_char(const ModuleRep& u, const SylowData& s);

/// End_k(U) = U* (x) U has a one-dimensional Brauer quotient at every
/// nontrivial Q <= P up to conjugacy, which forces End_k(U) restricted to P
/// to be k plus a free module. Also checks dim End_k(U) = 1 mod |P|.
bool is_endotrivial_direct(const ModuleRep& u, const SylowData& s);

/// Class of V^(x)n. With all Brauer quotients one-dimensional, V^(x)n is a
/// trivial-source endo-trivial module plus a projective; N acts on T(P) by
/// some mu in X(N). When mu comes from X(G) the non-projective part is
/// one-dimensional and x_index names it.
struct TensorPowerClass {
  unsigned n = 0;
  std::size_t dim = 0;
  bool brauer_all_ones = false;
  std::vector<std::size_t> brauer_vector;
  std::optional<std::size_t> n_index;  // mu, index in all_characters(X(N))
  std::optional<std::size_t> x_index;  // index in all_characters(X(G))
  std::uint32_t order = 0;             // order of the class in X(G)
};
TensorPowerClass tensor_power_class(const ModuleRep& v, unsigned n, const SylowData& s, const modrep::XPtr& xg,
                                    const modrep::XPtr& xn);

}  // namespace etk::core
