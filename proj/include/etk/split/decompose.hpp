#pragma once

#include <cstdint>
#include <vector>

#include "etk/split/hecke.hpp"

namespace etk::split {

/// One indecomposable summand e_i (lambda induced) of the induced module.
struct Summand {
  modrep::ModuleRep module;
  FMatrix basis;          // rows span the summand inside the induced module
  Vec idempotent;         // e_i in the Hecke basis
  std::size_t corner_dim = 0;          // dim e_i E e_i
  std::size_t corner_radical_dim = 0;  // dim e_i J e_i
  std::size_t iso_class = 0;           // summands with equal class are isomorphic
};

struct Decomposition {
  std::vector<Summand> summands;
  std::size_t iso_class_count = 0;
};

/// Krull-Schmidt decomposition of the induced module from primitive
/// idempotents of its endomorphism algebra. Throws FieldTooSmall when the
/// algebra does not split over the field.
Decomposition split_summands(const HeckeEnd& h, std::uint64_t seed);

}  // namespace etk::split
