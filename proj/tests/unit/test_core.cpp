#include "doctest.h"
#include "etk/core/report.hpp"
#include "etk/grp/io.hpp"

using namespace etk;
using namespace etk::core;

namespace {

grp::GroupPtr perm_group(std::size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<grp::GElement> gens;
  for (auto c : cycles) gens.push_back(grp::parse_cycles(c, degree));
  return std::make_shared<const grp::GroupTable>(grp::GroupTable::enumerate(gens));
}

grp::GroupPtr cover_3a6() {
  return std::make_shared<const grp::GroupTable>(
      grp::GroupTable::enumerate(grp::read_group_file(std::string(ETK_DATA_DIR) + "/groups/3A6.grp")));
}

}  // namespace

TEST_CASE("X(G), restriction and Sylow data") {
  auto g = perm_group(7, {"(1,2,3)", "(4,5,6,7)", "(4,6)"});  // C3 x D8
  auto xg = modrep::XStructure::make(g, 2);
  CHECK(xg->size() == 3);
  const auto s = sylow_data(*g, 2);
  CHECK(s.type.name() == "dihedral(8)");
  CHECK(s.n.order() == 24);
  CHECK(s.cyclic.size() == 4);
  CHECK(s.nontrivial.size() == 7);
  auto xn = modrep::XStructure::make(s.n_table.table, 2);
  // N = G, so restriction is the identity on X.
  const auto chars = modrep::all_characters(xg);
  for (std::size_t i = 0; i < chars.size(); ++i) CHECK(restrict_character(chars[i], s.n_table, xn) == i);
}

TEST_CASE("endo-triviality tests on one-dimensional and free modules") {
  auto a4 = perm_group(4, {"(1,2,3)", "(1,2)(3,4)"});
  const auto s = sylow_data(*a4, 2);
  auto f = ffla::FieldTable::make(2, 2);
  const auto k = modrep::trivial_module(a4, f);
  const auto ct = is_endotrivial_char(k, s);
  CHECK(ct.endotrivial);
  CHECK(ct.witness == std::vector<std::size_t>{1, 1, 1});
  CHECK(is_endotrivial_direct(k, s));
  for (const auto& lam : modrep::all_characters(modrep::XStructure::make(a4, 2))) {
    const auto m = modrep::one_dim_module(lam, f);
    CHECK(is_endotrivial_char(m, s).endotrivial);
    CHECK(is_endotrivial_direct(m, s));
  }
  // The regular module of A4 restricted to P is free: not endo-trivial.
  const auto t1 = grp::make_subgroup_table(*a4, grp::trivial_subgroup(*a4));
  const auto reg = modrep::induce(modrep::trivial_module(t1.table, f), a4, t1);
  CHECK_FALSE(is_endotrivial_char(reg, s).endotrivial);
  CHECK_FALSE(is_endotrivial_direct(reg, s));
}

TEST_CASE("K for A4 and A5") {
  AnalyzeOptions opt;
  const auto a4 = compute_K(perm_group(4, {"(1,2,3)", "(1,2)(3,4)"}), "A4", opt);
  CHECK(a4.k_invariant_factors == std::vector<std::uint32_t>{3});
  CHECK(a4.x_image_invariant_factors == std::vector<std::uint32_t>{3});
  CHECK(a4.tt_over_x.empty());
  CHECK(a4.properties.ok());

  const auto a5 = compute_K(perm_group(5, {"(1,2,3,4,5)", "(1,2,3)"}), "A5", opt);
  CHECK(a5.k_invariant_factors == std::vector<std::uint32_t>{3});
  CHECK(a5.x_image.size() == 1);
  CHECK(a5.tt_over_x == std::vector<std::uint32_t>{3});
  REQUIRE(a5.lambdas.size() == 3);
  CHECK(a5.lambdas[0].dim == 1);
  for (std::size_t i = 1; i < 3; ++i) {
    CHECK(a5.lambdas[i].dim == 5);
    CHECK(a5.lambdas[i].summand_dims == std::vector<std::size_t>{5});
    CHECK_FALSE(a5.lambdas[i].simple);
    CHECK(a5.lambdas[i].factors == std::vector<std::string>{"1a", "2a", "2b"});
  }
  CHECK(a5.properties.ok());
  CHECK(a5.caveats.empty());
}

TEST_CASE("triple cover of A6: simple 9-dimensional classes, cube trivial") {
  AnalyzeOptions opt;
  opt.tensor_power = 3;
  const auto r = compute_K(cover_3a6(), "3A6", opt);
  CHECK(r.k_invariant_factors == std::vector<std::uint32_t>{3});
  CHECK(r.x_image_invariant_factors.empty());
  CHECK(r.field_degree == 2);
  for (std::size_t i = 1; i < 3; ++i) {
    CHECK(r.lambdas[i].dim == 9);
    CHECK(r.lambdas[i].simple);
    CHECK(r.lambdas[i].brauer_vector == std::vector<std::size_t>{1, 1, 1, 1});
  }
  CHECK(r.properties.ok());
  REQUIRE(r.tensor);
  CHECK(r.tensor->brauer_all_ones);
  CHECK(r.tensor->n_index == std::optional<std::size_t>{0});
  CHECK(r.tensor->dim == 729);
  REQUIRE(r.tensor->x_index);
  CHECK(*r.tensor->x_index == 0);
  CHECK(r.tensor->order == 1);
}

TEST_CASE("quaternion and cyclic Sylow subgroups give K-only reports") {
  AnalyzeOptions opt;
  const auto q8 = compute_K(perm_group(8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}), "Q8", opt);
  CHECK(q8.sylow_type == "quaternion(8)");
  CHECK(q8.caveats == std::vector<std::string>{"K_only"});
  // S3 at p = 2: cyclic Sylow, N = P, K trivial.
  const auto s3 = compute_K(perm_group(3, {"(1,2,3)", "(1,2)"}), "S3", opt);
  CHECK(s3.caveats == std::vector<std::string>{"K_only"});
  CHECK(s3.k_invariant_factors.empty());
}

TEST_CASE("theorem_check compares against declared expectations") {
  AnalyzeOptions opt;
  const auto r = compute_K(perm_group(5, {"(1,2,3,4,5)", "(1,2,3)"}), "A5", opt);
  Expectation e;
  e.label = "A5";
  e.k_invariant_factors = {3};
  e.tt_over_x = {3};
  e.k_dims = {1, 5, 5};
  e.nontrivial_factor_dims = {1, 2, 2};
  CHECK(theorem_check(r, e).ok());
  e.k_dims = {1, 4, 4};
  const auto bad = theorem_check(r, e);
  CHECK_FALSE(bad.ok());
  CHECK(bad.discrepancies == std::vector<std::string>{"k_dims"});
}

TEST_CASE("errors carry the stage") {
  AnalyzeOptions opt;
  CHECK_THROWS_AS(compute_K(perm_group(3, {"(1,2,3)"}), "C3", opt), EtkError);
}
