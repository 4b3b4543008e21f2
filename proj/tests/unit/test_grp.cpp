#include <set>

#include "doctest.h"
#include "etk/grp/algorithms.hpp"
#include "etk/grp/io.hpp"

using namespace etk::grp;

namespace {

GroupTable perm_group(std::size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<GElement> gens;
  for (auto c : cycles) gens.push_back(parse_cycles(c, degree));
  return GroupTable::enumerate(gens);
}

// Every subset of S containing 1 and closed under products, |S| <= 16.
std::size_t brute_subgroup_count(const GroupTable& g, const Subgroup& s) {
  const std::size_t n = s.order();
  std::size_t count = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {  // bit 0 = identity
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      for (std::size_t j = 0; j < n && closed; ++j)
        if ((mask >> i & 1) && (mask >> j & 1)) {
          auto k = g.mul(s.elements[i], s.elements[j]);
          auto pos = std::lower_bound(s.elements.begin(), s.elements.end(), k) - s.elements.begin();
          closed = mask >> pos & 1;
        }
    count += closed;
  }
  return count;
}

}  // namespace

TEST_CASE("enumerate") {
  auto a4 = perm_group(4, {"(1,2,3)", "(1,2)(3,4)"});
  CHECK(a4.order() == 12);
  CHECK(a4.element(0).is_identity());
  auto d8 = perm_group(4, {"(1,2,3,4)", "(1,3)"});
  CHECK(d8.order() == 8);
  for (std::size_t i = 0; i < a4.order(); ++i) {
    std::size_t x = 0;
    for (auto s : a4.word(i)) x = a4.mul(x, a4.generator(s));
    CHECK(x == i);
    CHECK(a4.mul(i, a4.inv(i)) == 0);
  }
  CHECK_THROWS_AS(GroupTable::enumerate({parse_cycles("(1,2,3,4,5,6,7)", 7), parse_cycles("(1,2)", 7)}, 1000),
                  GroupError);
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 3), GroupError);
}

TEST_CASE("sylow and classification") {
  auto a6 = perm_group(6, {"(1,2,3)", "(2,3,4,5,6)"});
  REQUIRE(a6.order() == 360);
  auto p = sylow(a6, 2);
  CHECK(p.order() == 8);
  CHECK(classify_2group(a6, p).name() == "dihedral(8)");
  CHECK(normalizer(a6, p) == p);
  auto a4 = perm_group(4, {"(1,2,3)", "(1,2)(3,4)"});
  CHECK(classify_2group(a4, sylow(a4, 2)).type == TwoGroupType::klein_four);
  auto c3 = perm_group(3, {"(1,2,3)"});
  CHECK_THROWS_AS(sylow(c3, 2), GroupError);
  auto c4 = perm_group(4, {"(1,2,3,4)"});
  CHECK(classify_2group(c4, whole_group(c4)).type == TwoGroupType::cyclic);
  auto q8 = perm_group(8, {"(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"});
  REQUIRE(q8.order() == 8);
  CHECK(classify_2group(q8, whole_group(q8)).type == TwoGroupType::quaternion);
  auto d16 = perm_group(8, {"(1,2,3,4,5,6,7,8)", "(2,8)(3,7)(4,6)"});
  CHECK(classify_2group(d16, whole_group(d16)).name() == "dihedral(16)");
  // SD16 on 8 points: a = (1..8), b: i -> 3i mod 8.
  auto sd16 = perm_group(8, {"(1,2,3,4,5,6,7,8)", "(2,4)(3,7)(6,8)"});
  REQUIRE(sd16.order() == 16);
  CHECK(classify_2group(sd16, whole_group(sd16)).type == TwoGroupType::semidihedral);
  auto c2c4 = perm_group(6, {"(1,2)", "(3,4,5,6)"});
  CHECK(classify_2group(c2c4, whole_group(c2c4)).type == TwoGroupType::other);
}

TEST_CASE("closed-form orders") {
  struct Case {
    GroupTable g;
    std::size_t order, p2, n;
  };
  std::vector<Case> cases;
  cases.push_back({perm_group(4, {"(1,2,3)", "(1,2)(3,4)"}), 12, 4, 12});
  cases.push_back({perm_group(5, {"(1,2,3,4,5)", "(1,2,3)"}), 60, 4, 12});
  cases.push_back({perm_group(6, {"(1,2,3)", "(2,3,4,5,6)"}), 360, 8, 8});
  cases.push_back({perm_group(7, {"(1,2,3,4,5,6,7)", "(1,2,3)"}), 2520, 8, 8});
  for (auto& c : cases) {
    CHECK(c.g.order() == c.order);
    auto p = sylow(c.g, 2);
    CHECK(p.order() == c.p2);
    auto n = normalizer(c.g, p);
    CHECK(n.order() == c.n);
    CHECK(is_subgroup_of(p, n));
  }
}

TEST_CASE("derived subgroup, center, O_p'") {
  auto a5 = perm_group(5, {"(1,2,3,4,5)", "(1,2,3)"});
  CHECK(derived_subgroup(a5).order() == 60);
  auto d8 = perm_group(4, {"(1,2,3,4)", "(1,3)"});
  auto dd = derived_subgroup(d8);
  CHECK(dd.order() == 2);
  CHECK(dd.contains(d8.find(parse_cycles("(1,3)(2,4)", 4))));
  auto c6 = perm_group(5, {"(1,2,3)", "(4,5)"});
  CHECK(derived_subgroup(c6).order() == 1);
  CHECK(center(d8).order() == 2);
  CHECK(o_pprime(a5, 2).order() == 1);
  auto c3a4 = perm_group(7, {"(1,2,3)", "(4,5,6)", "(4,5)(6,7)"});
  REQUIRE(c3a4.order() == 36);
  auto o = o_pprime(c3a4, 2);
  CHECK(o.order() == 3);
  CHECK(o.contains(c3a4.find(parse_cycles("(1,2,3)", 7))));
}

TEST_CASE("subgroups up to conjugacy") {
  auto v4 = perm_group(4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  CHECK(subgroups_up_to_conj(v4, whole_group(v4)).size() == 5);
  auto c2 = perm_group(2, {"(1,2)"});
  CHECK(subgroups_up_to_conj(c2, whole_group(c2)).size() == 2);
  auto d8 = perm_group(4, {"(1,2,3,4)", "(1,3)"});
  auto all = all_subgroups(d8, whole_group(d8));
  CHECK(all.size() == brute_subgroup_count(d8, whole_group(d8)));
  CHECK(all.size() == 10);
  auto reps = subgroups_up_to_conj(d8, whole_group(d8));
  CHECK(reps.size() == 8);
  for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i - 1].order() <= reps[i].order());
  auto d16 = perm_group(8, {"(1,2,3,4,5,6,7,8)", "(2,8)(3,7)(4,6)"});
  CHECK(all_subgroups(d16, whole_group(d16)).size() == brute_subgroup_count(d16, whole_group(d16)));
  CHECK(maximal_subgroups(d8, whole_group(d8)).size() == 3);
}

TEST_CASE("p'-abelianization") {
  auto c3d8 = perm_group(7, {"(1,2,3)", "(4,5,6,7)", "(4,6)"});
  auto a = abelianization_pprime(c3d8, 2);
  CHECK(a.orders == std::vector<std::uint32_t>{3});
  CHECK(a.exponent == 3);
  auto c9d8 = perm_group(13, {"(1,2,3,4,5,6,7,8,9)", "(10,11,12,13)", "(10,12)"});
  auto b = abelianization_pprime(c9d8, 2);
  CHECK(b.orders == std::vector<std::uint32_t>{9});
  auto a5 = perm_group(5, {"(1,2,3,4,5)", "(1,2,3)"});
  CHECK(abelianization_pprime(a5, 2).orders.empty());
  auto c3c6 = perm_group(8, {"(1,2,3)", "(4,5,6)(7,8)"});
  auto c = abelianization_pprime(c3c6, 2);
  CHECK(c.orders == std::vector<std::uint32_t>{3, 3});
  // Coordinates form a homomorphism.
  for (std::size_t x = 0; x < c3c6.order(); ++x)
    for (std::size_t y = 0; y < c3c6.order(); ++y) {
      auto z = c3c6.mul(x, y);
      for (std::size_t i = 0; i < c.orders.size(); ++i)
        CHECK((c.coords[x][i] + c.coords[y][i]) % c.orders[i] == c.coords[z][i]);
    }
  auto counts = [](std::uint64_t d) -> std::uint64_t { return d == 3 ? 9 : d == 9 ? 27 : d == 2 ? 2 : 1; };
  // Z/3 x Z/9 x Z/2 has |A[3]| = 9, |A[9]| = 27, |A[2]| = 2
  CHECK(invariant_factors_from_counts(54, counts) == std::vector<std::uint32_t>{3, 18});
}

TEST_CASE("3.A6 data file") {
  auto gens = read_group_file(std::string(ETK_DATA_DIR) + "/groups/3A6.grp");
  auto g = GroupTable::enumerate(gens);
  CHECK(g.order() == 1080);
  CHECK(center(g).order() == 3);
  CHECK(derived_subgroup(g).order() == 1080);
  auto p = sylow(g, 2);
  CHECK(classify_2group(g, p).name() == "dihedral(8)");
  auto n = normalizer(g, p);
  CHECK(n.order() == 24);
  auto o = o_pprime(g, 2);
  CHECK(o == center(g));
  CHECK(format_matrix_generator(gens[0].mat()) == "0 0 2 2 3 3 1 0 2");
}
