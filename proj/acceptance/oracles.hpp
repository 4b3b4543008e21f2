#pragma once

#include <cstdint>
#include <string>

namespace etk::oracles {

struct OracleResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

/// radical() against the brute-force largest nil left ideal, on random
/// matrix algebras of dimension <= 5 over GF(2) and GF(3).
OracleResult radical_oracle(std::size_t algebras, std::uint64_t seed);

/// Brauer quotient dimensions against fixed-point counts on random
/// permutation modules (random permutation groups, random 2-subgroups Q).
OracleResult brauer_fixed_point_oracle(std::size_t modules, std::uint64_t seed);

/// Number of Jordan blocks of size one of an involution against the Brauer
/// quotient at the subgroup it generates, on the same corpus.
OracleResult jordan_brauer_oracle(std::size_t modules, std::uint64_t seed);

}  // namespace etk::oracles
