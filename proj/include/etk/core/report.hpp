#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "etk/core/endotrivial.hpp"

namespace etk::core {

struct AnalyzeOptions {
  unsigned prime = 2;
  unsigned field_degree = 0;  // 0: smallest degree holding the values of X(N)
  unsigned max_field_degree = 16;
  std::uint64_t seed = 1;
  bool properties = true;       // run the property suite
  std::uint64_t second_seed = 0;  // 0: seed + 1, used for Krull-Schmidt stability
  std::size_t direct_test_budget = 40;  // largest summand dim for the End test
  unsigned tensor_power = 0;            // 0: skip
  std::size_t tensor_budget = 1000;     // largest dim of V^(x)n
};

struct LambdaReport {
  std::size_t index = 0;  // in all_characters(X(N))
  std::vector<std::uint32_t> coords;
  std::uint32_t order = 1;
  std::size_t induced_dim = 0;
  std::size_t hecke_dim = 0;
  std::size_t mackey_dim = 0;
  std::vector<std::size_t> summand_dims;  // sorted
  std::size_t dim = 0;                    // of the Green correspondent
  std::vector<std::size_t> brauer_vector;  // over nontrivial cyclic Q <= P
  bool endotrivial_char = false;
  bool endotrivial_direct = false;
  bool simple = false;
  std::vector<std::string> factors;  // composition factor labels, sorted
  bool in_x_image = false;
  std::shared_ptr<const ModuleRep> module;  // the Green correspondent
};

struct PropertyReport {
  bool ran = false;
  std::size_t summands_tested = 0;
  std::size_t summands_skipped = 0;  // over the direct-test budget
  bool tests_agree = true;
  bool closed = true;
  bool duality = true;
  bool dim_congruence = true;
  bool ks_stable = true;
  bool hecke_mackey = true;
  bool restriction_coherent = true;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct KReport {
  std::string group;
  std::size_t group_order = 0;
  unsigned prime = 2;
  unsigned field_degree = 1;
  std::size_t sylow_order = 0;
  std::string sylow_type;
  std::size_t normalizer_order = 0;
  std::vector<std::uint32_t> xn_structure;
  std::vector<LambdaReport> lambdas;
  std::vector<std::size_t> k_elements;  // indices into lambdas
  std::vector<std::uint32_t> k_invariant_factors;
  std::vector<std::size_t> x_image;  // indices into lambdas
  std::vector<std::uint32_t> x_image_invariant_factors;
  std::vector<std::uint32_t> tt_over_x;
  std::vector<std::string> caveats;
  std::uint64_t seed = 0;
  PropertyReport properties;
  std::optional<TensorPowerClass> tensor;
  std::optional<std::size_t> tensor_lambda;  // index of the V used for the tensor power
  std::shared_ptr<const SylowData> sylow;
  modrep::XPtr xg, xn;
};

/// Full pipeline: Sylow, normalizer, X(N), induction, splitting, Green
/// correspondents, both endo-triviality tests, K(G) and its structure. The
/// field is enlarged automatically when an algebra or module does not split.
/// Throws EtkError (tagged with the lambda and stage) on any failure,
/// including a property-suite violation.
KReport compute_K(grp::GroupPtr g, const std::string& name, const AnalyzeOptions& opt);

/// Expected values declared by the builtin catalog.
struct Expectation {
  std::string label;
  std::vector<std::uint32_t> k_invariant_factors;
  std::vector<std::uint32_t> x_image_invariant_factors;
  std::vector<std::uint32_t> tt_over_x;
  /// Dimensions of the correspondents of K, sorted (empty: not checked).
  std::vector<std::size_t> k_dims;
  /// Dimensions of the correspondents outside K, sorted (empty: not checked).
  std::vector<std::size_t> non_k_dims;
  /// Every correspondent in K outside the X(G) image is simple.
  std::optional<bool> nontrivial_simple;
  /// Composition factor dimensions of each K correspondent outside the image.
  std::vector<std::size_t> nontrivial_factor_dims;
  /// The class of V^(x)3 of a nontrivial correspondent is nontrivial in X(G).
  std::optional<bool> cube_nontrivial;
};

struct TheoremCheck {
  std::vector<std::string> passed;
  std::vector<std::string> discrepancies;
  bool ok() const { return discrepancies.empty(); }
};

TheoremCheck theorem_check(const KReport& r, const Expectation& e);

}  // namespace etk::core
