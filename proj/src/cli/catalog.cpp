#include "etk/cli/catalog.hpp"

#include <map>
#include <numeric>

#include "etk/ffla/field.hpp"
#include "etk/grp/algorithms.hpp"
#include "etk/grp/io.hpp"

namespace etk::cli {

namespace detail {
const std::map<std::string, std::string>& embedded_groups();
}

const std::string& embedded_group_text(const std::string& name) {
  const auto& m = detail::embedded_groups();
  const auto it = m.find(name);
  if (it == m.end()) throw grp::GroupError("no embedded group data named " + name);
  return it->second;
}

std::vector<grp::GElement> projective_line_group(unsigned p, unsigned e, bool psl) {
  const auto f = ffla::FieldTable::make(p, e);
  const unsigned q = f->q();
  const std::uint32_t inf = q;
  // Points 0..q-1 are field elements, q is infinity; x -> (ax + b) / (cx + d).
  auto moebius = [&](ffla::Elem a, ffla::Elem b, ffla::Elem c, ffla::Elem d) {
    std::vector<std::uint32_t> img(q + 1);
    for (std::uint32_t x = 0; x <= q; ++x) {
      ffla::Elem num, den;
      if (x == inf) {
        num = a;
        den = c;
      } else {
        num = f->add(f->mul(a, static_cast<ffla::Elem>(x)), b);
        den = f->add(f->mul(c, static_cast<ffla::Elem>(x)), d);
      }
      img[x] = den == 0 ? inf : f->mul(num, f->inv(den));
    }
    return grp::GElement::permutation(std::move(img));
  };
  const ffla::Elem w = f->primitive();
  const ffla::Elem scale = psl ? f->mul(w, w) : w;
  std::vector<grp::GElement> gens{moebius(1, 1, 0, 1), moebius(scale, 0, 0, 1), moebius(0, f->neg(1), 1, 0)};
  if (q == 3 && psl) gens.erase(gens.begin() + 1);  // w^2 = 1
  return gens;
}

namespace {

std::vector<grp::GElement> perms(std::size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<grp::GElement> out;
  for (auto c : cycles) out.push_back(grp::parse_cycles(c, degree));
  return out;
}

// C9 * 3.A6 inside GL(3,64): the 3.A6 generators together with a scalar
// z I where z^3 is the central scalar of 3.A6.
std::vector<grp::GElement> c9_central_product() {
  const auto small = grp::parse_group_text(embedded_group_text("3A6"));
  const auto f4 = small.front().mat().field();
  const auto f64 = ffla::FieldTable::make(2, 6);
  const ffla::FieldEmbedding emb(f4, f64);
  std::vector<grp::GElement> gens;
  for (const auto& g : small) {
    ffla::FMatrix m(f64, g.mat().rows(), g.mat().cols());
    for (std::size_t i = 0; i < m.data().size(); ++i) m.data()[i] = emb(g.mat().data()[i]);
    gens.push_back(grp::GElement::matrix(std::move(m)));
  }
  const auto cover = grp::GroupTable::enumerate(small);
  const auto z = grp::center(cover);
  std::optional<ffla::Elem> c;
  for (auto x : z.elements)
    if (cover.element_order(x) == 3) {
      c = emb(cover.element(x).mat()(0, 0));
      break;
    }
  if (!c) throw grp::GroupError("3.A6 data has no central element of order 3");
  for (unsigned x = 1; x < f64->q(); ++x) {
    const auto v = static_cast<ffla::Elem>(x);
    if (f64->order(v) == 9 && f64->mul(v, f64->mul(v, v)) == *c) {
      gens.push_back(grp::GElement::matrix(ffla::FMatrix::scalar(f64, 3, v)));
      return gens;
    }
  }
  throw grp::GroupError("no ninth root of unity cubing to the central scalar");
}

core::Expectation trivial_k(const std::string& label) {
  core::Expectation e;
  e.label = label;
  e.k_dims = {1};
  return e;
}

core::Expectation klein_z3(const std::string& label, std::size_t dim, std::vector<std::size_t> factor_dims) {
  core::Expectation e;
  e.label = label;
  e.k_invariant_factors = {3};
  e.tt_over_x = {3};
  e.k_dims = {1, dim, dim};
  e.nontrivial_factor_dims = std::move(factor_dims);
  return e;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](CatalogEntry e) { c.push_back(std::move(e)); };

  {
    core::Expectation e;
    e.label = "Klein-four Sylow, N = G: K = X = Z/3";
    e.k_invariant_factors = {3};
    e.x_image_invariant_factors = {3};
    e.k_dims = {1, 1, 1};
    add({"A4", "alternating", [] { return perms(4, {"(1,2,3)", "(1,2)(3,4)"}); }, 12, 1, 1, false, e});
  }
  add({"A5", "alternating", [] { return perms(5, {"(1,2,3,4,5)", "(1,2,3)"}); }, 60, 1, 1, true,
       klein_z3("Klein-four Sylow, G = A5: 5-dimensional classes", 5, {1, 2, 2})});
  add({"A6", "alternating", [] { return perms(6, {"(1,2,3,4,5)", "(4,5,6)"}); }, 360, 1, 1, true,
       trivial_k("dihedral Sylow, O_2'(G) = 1, G not a cover: TT = X = 1")});
  add({"A7", "alternating", [] { return perms(7, {"(1,2,3,4,5,6,7)", "(5,6,7)"}); }, 2520, 1, 1, true,
       trivial_k("dihedral Sylow, O_2'(G) = 1: TT = X = 1")});
  add({"S4", "symmetric", [] { return perms(4, {"(1,2,3,4)", "(1,2)"}); }, 24, 1, 1, false,
       trivial_k("self-normalizing dihedral Sylow: K = 1")});

  for (unsigned q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const unsigned p = q == 9 ? 3 : q, e = q == 9 ? 2 : 1;
    const std::size_t pgl = static_cast<std::size_t>(q) * (q * q - 1);
    std::optional<core::Expectation> exp_psl;
    if (q == 3) exp_psl = c.front().expectation;
    if (q == 5) exp_psl = klein_z3("PSL(2,5) = A5", 5, {1, 2, 2});
    if (q == 7 || q == 9) exp_psl = trivial_k("dihedral Sylow, simple, not A6-like cover: TT = X = 1");
    if (q == 11) exp_psl = klein_z3("Klein-four Sylow, q = 3 mod 8: dim (q-1)/2", 5, {});
    if (q == 13) exp_psl = klein_z3("Klein-four Sylow, q = 5 mod 8: dim q, factors 1, (q-1)/2, (q-1)/2", 13, {1, 6, 6});
    add({"PSL(2," + std::to_string(q) + ")", "psl2", [p, e] { return projective_line_group(p, e, true); }, pgl / 2, 1,
         1, q > 3, exp_psl});
    std::optional<core::Expectation> exp_pgl;
    if (q == 9) exp_pgl = trivial_k("dihedral Sylow, O_2'(G) = 1: TT = X = 1");
    add({"PGL(2," + std::to_string(q) + ")", "pgl2", [p, e] { return projective_line_group(p, e, false); }, pgl, 1, 1,
         false, exp_pgl});
  }

  add({"D8", "2-group", [] { return perms(4, {"(1,2,3,4)", "(1,3)"}); }, 8, 2, 1, false, trivial_k("2-group: K = 1")});
  add({"D16", "2-group", [] { return perms(8, {"(1,2,3,4,5,6,7,8)", "(1,8)(2,7)(3,6)(4,5)"}); }, 16, 2, 1, false,
       trivial_k("2-group: K = 1")});
  add({"C2xC2", "2-group", [] { return perms(4, {"(1,2)(3,4)", "(1,3)(2,4)"}); }, 4, 4, 1, false,
       trivial_k("2-group: K = 1")});
  add({"Q8", "2-group", [] { return perms(8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}); }, 8, 2, 1, false,
       std::nullopt});
  add({"C4", "2-group", [] { return perms(4, {"(1,2,3,4)"}); }, 4, 4, 1, false, std::nullopt});

  {
    core::Expectation e;
    e.label = "triple cover of A6: TT/X elementary abelian 3, simple 9-dimensional classes";
    e.k_invariant_factors = {3};
    e.tt_over_x = {3};
    e.k_dims = {1, 9, 9};
    e.nontrivial_simple = true;
    e.nontrivial_factor_dims = {9};
    add({"3A6", "cover", [] { return grp::parse_group_text(embedded_group_text("3A6")); }, 1080, 3, 3, true, e});
  }
  {
    core::Expectation e = trivial_k("triple cover of A7: TT = X = 1, 15-dimensional correspondents not endo-trivial");
    e.non_k_dims = {15, 15};
    add({"3A7", "cover", [] { return grp::parse_group_text(embedded_group_text("3A7")); }, 7560, 3, 3, true, e});
  }
  {
    core::Expectation e;
    e.label = "C9 * 3.A6: K = X(N) = Z/9, X(G) = Z/3, cube of a 9-dimensional class nontrivial in X(G)";
    e.k_invariant_factors = {9};
    e.x_image_invariant_factors = {3};
    e.tt_over_x = {3};
    e.k_dims = {1, 1, 1, 9, 9, 9, 9, 9, 9};
    e.nontrivial_simple = true;
    e.nontrivial_factor_dims = {9};
    e.cube_nontrivial = true;
    add({"C9*3A6", "cover", c9_central_product, 3240, 9, 9, false, e});
  }
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = make_catalog();
  return c;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

grp::GroupPtr build_validated(const CatalogEntry& e) {
  auto g = std::make_shared<const grp::GroupTable>(grp::GroupTable::enumerate(e.build()));
  auto fail = [&](const std::string& what, std::size_t got, std::size_t want) {
    throw grp::GroupError("builtin " + e.name + " failed validation: " + what + " is " + std::to_string(got) +
                          ", expected " + std::to_string(want));
  };
  if (g->order() != e.order) fail("|G|", g->order(), e.order);
  if (e.center_order) {
    const auto z = grp::center(*g).order();
    if (z != *e.center_order) fail("|Z(G)|", z, *e.center_order);
  }
  if (e.o2prime_order) {
    const auto o = grp::o_pprime(*g, 2).order();
    if (o != *e.o2prime_order) fail("|O_2'(G)|", o, *e.o2prime_order);
  }
  if (e.perfect) {
    const bool perfect = grp::derived_subgroup(*g).order() == g->order();
    if (perfect != *e.perfect) fail("perfect", perfect, *e.perfect);
  }
  return g;
}

}  // namespace etk::cli
