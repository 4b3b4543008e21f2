#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etk/modrep/module.hpp"
#include "etk/split/algebra.hpp"

namespace etk::split {

using modrep::ModuleRep;

/// Smallest submodule containing the given rows (column vectors acted on by rho).
FMatrix spin(const ModuleRep& m, const FMatrix& seeds);
/// Smallest subspace of row vectors containing the seeds and closed under w -> w rho(s).
FMatrix spin_dual(const ModuleRep& m, const FMatrix& seeds);

struct NortonResult {
  bool irreducible = false;
  std::optional<FMatrix> submodule;  // proper nonzero submodule when reducible
};

/// Norton's test with an element of nullity one; a positive answer proves
/// absolute irreducibility. Throws FieldTooSmall when no conclusive element
/// is found within the trial budget.
NortonResult norton_test(const ModuleRep& m, std::uint64_t seed, int trial_cap = 400);
bool is_irreducible(const ModuleRep& m, std::uint64_t seed);

/// Composition factors, by recursive splitting along submodules found by the
/// Norton test. Each returned module passes is_irreducible.
std::vector<ModuleRep> chop(const ModuleRep& m, std::uint64_t seed);

/// True iff an invertible module homomorphism M1 -> M2 exists. Solves the
/// intertwiner system, then tests random and, for small spaces, all elements
/// of the solution space for invertibility.
bool iso_test(const ModuleRep& a, const ModuleRep& b, std::uint64_t seed);

/// Labels such as "1a", "6a", "6b" for a list of simple modules: isomorphic
/// modules share a label; letters follow a trace fingerprint order.
std::vector<std::string> factor_labels(const std::vector<ModuleRep>& simples, std::uint64_t seed);

}  // namespace etk::split
