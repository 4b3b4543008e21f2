#include <random>

#include "doctest.h"
#include "etk/ffla/linalg.hpp"
#include "etk/grp/io.hpp"
#include "etk/modrep/brauer.hpp"

using namespace etk;
using namespace etk::modrep;
using grp::GroupTable;
using grp::parse_cycles;

namespace {

grp::GroupPtr perm_group(std::size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<grp::GElement> gens;
  for (auto c : cycles) gens.push_back(parse_cycles(c, degree));
  return std::make_shared<const GroupTable>(GroupTable::enumerate(gens));
}

// dim of {X : X rho(s) = rho(s) X for all generators s}, by solving the linear system.
std::size_t commutant_dim(const ModuleRep& m) {
  const std::size_t n = m.dim();
  const auto& F = *m.field();
  ffla::FMatrix sys(m.field(), 0, n * n);
  for (const auto& a : m.generators()) {
    // (X A - A X)_{ij} = sum_k X_ik A_kj - A_ik X_kj
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<ffla::Elem> row(n * n, 0);
        for (std::size_t k = 0; k < n; ++k) {
          row[i * n + k] = F.add(row[i * n + k], a(k, j));
          row[k * n + j] = F.sub(row[k * n + j], a(i, k));
        }
        sys.append_row(row);
      }
  }
  return ffla::nullspace(sys).rows();
}

std::size_t orbit_count(const GroupTable& g, const grp::Subgroup& q) {
  const std::size_t n = g.element(0).degree();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto s : q.generators)
    for (std::size_t i = 0; i < n; ++i) parent[find(i)] = find(g.element(s).images()[i]);
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += find(i) == i;
  return c;
}

std::size_t fixed_point_count(const GroupTable& g, const grp::Subgroup& q) {
  const std::size_t n = g.element(0).degree();
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool fixed = true;
    for (auto s : q.generators) fixed = fixed && g.element(s).images()[i] == i;
    c += fixed;
  }
  return c;
}

}  // namespace

TEST_CASE("linear characters") {
  auto g = perm_group(7, {"(1,2,3)", "(4,5,6,7)", "(4,6)"});
  auto x = XStructure::make(g, 2);
  auto chars = all_characters(x);
  REQUIRE(chars.size() == 3);
  auto F4 = ffla::FieldTable::make(2, 2);
  CHECK(chars[0].is_trivial());
  auto m0 = one_dim_module(chars[0], F4);
  for (const auto& a : m0.generators()) CHECK(a.is_identity());
  auto lam = chars[1];
  CHECK(lam.order() == 3);
  auto m1 = one_dim_module(lam, F4);
  CHECK(F4->order(m1.gen(0)(0, 0)) == 3);
  CHECK(m1.gen(1)(0, 0) == 1);
  CHECK(m1.gen(2)(0, 0) == 1);
  for (std::size_t i = 0; i < g->order(); ++i)
    if (g->element_order(i) % 2 == 0 && grp::is_p_power(g->element_order(i), 2)) CHECK(lam.exponent_at(i) == 0);
  for (std::size_t a = 0; a < g->order(); a += 5)
    for (std::size_t b = 0; b < g->order(); b += 7)
      CHECK((lam.exponent_at(a) + lam.exponent_at(b)) % 3 == lam.exponent_at(g->mul(a, b)));
  CHECK(lam * lam.inverse() == chars[0]);
  CHECK(m1.check_relations(1));
  CHECK(dual(m1).gen(0) == one_dim_module(lam.inverse(), F4).gen(0));
  CHECK_THROWS_AS(one_dim_module(lam, ffla::FieldTable::make(2, 1)), ModuleError);
}

TEST_CASE("induction") {
  auto F3 = ffla::FieldTable::make(3, 1);
  auto s3 = perm_group(3, {"(1,2,3)", "(1,2)"});
  auto c2 = grp::generate(*s3, {s3->find(parse_cycles("(1,2)", 3))});
  auto nt = grp::make_subgroup_table(*s3, c2);
  auto ind = induce(trivial_module(nt.table, F3), s3, nt);
  CHECK(ind.dim() == 3);
  CHECK(ind.check_relations(2));
  CHECK(fixed_points(ind, grp::whole_group(*s3)).rows() == 1);
  // Mackey: dim End of the permutation module = number of double cosets = 2.
  CHECK(commutant_dim(ind) == 2);

  auto g = std::make_shared<const GroupTable>(
      GroupTable::enumerate(grp::read_group_file(std::string(ETK_DATA_DIR) + "/groups/3A6.grp")));
  auto n = grp::normalizer(*g, grp::sylow(*g, 2));
  auto ntab = grp::make_subgroup_table(*g, n);
  auto x = XStructure::make(ntab.table, 2);
  REQUIRE(x->size() == 3);
  auto lam = all_characters(x)[1];
  auto big = induce(one_dim_module(lam, ffla::FieldTable::make(2, 2)), g, ntab);
  CHECK(big.dim() == 45);
  CHECK(big.check_relations(3));
}

TEST_CASE("tensor, dual, restrict") {
  auto F = ffla::FieldTable::make(2, 2);
  auto a5 = perm_group(5, {"(1,2,3,4,5)", "(1,2,3)"});
  auto m = permutation_module(a5, F);
  CHECK(m.check_relations(4));
  auto t = tensor(m, trivial_module(a5, F));
  for (std::size_t s = 0; s < 2; ++s) CHECK(t.gen(s) == m.gen(s));
  auto dd = dual(dual(m));
  for (std::size_t s = 0; s < 2; ++s) CHECK(dd.gen(s) == m.gen(s));
  auto mm = tensor(dual(m), m);
  CHECK(mm.dim() == 25);
  CHECK(mm.check_relations(5));
  auto p = grp::sylow(*a5, 2);
  auto pt = grp::make_subgroup_table(*a5, p);
  auto r1 = restrict(dual(mm), pt), r2 = dual(restrict(mm, pt));
  for (std::size_t s = 0; s < r1.generators().size(); ++s) CHECK(r1.gen(s) == r2.gen(s));
  auto r3 = restrict(tensor(m, m), pt), r4 = tensor(restrict(m, pt), restrict(m, pt));
  for (std::size_t s = 0; s < r3.generators().size(); ++s) CHECK(r3.gen(s) == r4.gen(s));
}

TEST_CASE("fixed points, Brauer quotients and Jordan profiles") {
  auto F = ffla::FieldTable::make(2, 1);
  auto c2 = perm_group(2, {"(1,2)"});
  auto reg = permutation_module(c2, F);  // free kC2-module of rank 1
  auto all = grp::whole_group(*c2);
  CHECK(fixed_points(reg, grp::trivial_subgroup(*c2)).rows() == 2);
  CHECK(fixed_points(reg, all).rows() == 1);
  CHECK(brauer_quotient(reg, all).dim == 0);
  CHECK(brauer_quotient(trivial_module(c2, F), all).dim == 1);
  auto jp = jordan_profile(reg, 1);
  CHECK(jp.size() == 3);
  CHECK(jp[1] == 0);
  CHECK(jp[2] == 1);
  auto id = jordan_profile(reg, 0);
  CHECK(id[1] == 2);

  auto d8 = perm_group(4, {"(1,2,3,4)", "(1,3)"});
  auto p = grp::whole_group(*d8);
  auto m = permutation_module(d8, F);
  for (const auto& q : grp::all_subgroups(*d8, p)) {
    CHECK(fixed_points(m, q).rows() == orbit_count(*d8, q));
    const auto bq = brauer_quotient(m, q);
    CHECK(bq.dim == fixed_point_count(*d8, q));
    CHECK(bq.dim <= bq.fixed.rows());
  }
  // Free kP-module: induce the trivial module from the trivial subgroup.
  auto t1 = grp::make_subgroup_table(*d8, grp::trivial_subgroup(*d8));
  auto free = induce(trivial_module(t1.table, F), d8, t1);
  for (const auto& q : grp::all_subgroups(*d8, p))
    if (q.order() > 1) CHECK(brauer_quotient(free, q).dim == 0);
  CHECK_THROWS_AS(brauer_quotient(permutation_module(perm_group(3, {"(1,2,3)"}), F),
                                  grp::whole_group(*perm_group(3, {"(1,2,3)"}))),
                  ModuleError);
}

TEST_CASE("Brauer quotient action of a normalizer") {
  auto F4 = ffla::FieldTable::make(2, 2);
  auto a4 = perm_group(4, {"(1,2,3)", "(1,2)(3,4)"});
  auto p = grp::sylow(*a4, 2);
  auto x = XStructure::make(a4, 2);
  auto lam = all_characters(x)[1];
  auto m = one_dim_module(lam, F4);
  const std::size_t t = a4->generator(0);
  std::vector<std::size_t> acting{t};
  auto bq = brauer_quotient(m, p, acting);
  REQUIRE(bq.dim == 1);
  CHECK(bq.actions[0](0, 0) == lam.value(t, *F4));
}
