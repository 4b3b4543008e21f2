#include "etk/core/endotrivial.hpp"

#include <algorithm>

namespace etk::core {

std::size_t restrict_character(const LinearCharacter& mu, const grp::SubgroupTable& n, const modrep::XPtr& xn) {
  const std::uint64_t mg = mu.structure()->exponent();
  const std::uint64_t mn = xn->exponent();
  const auto chars = modrep::all_characters(xn);
  const auto& nt = *n.table;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    bool same = true;
    for (std::size_t s = 0; s < nt.num_generators() && same; ++s) {
      const std::size_t sub = nt.generator(s);
      const std::uint64_t kg = mu.exponent_at(n.parent_index(sub));
      const std::uint64_t kn = chars[i].exponent_at(sub);
      same = kg * mn == kn * mg;
    }
    if (same) return i;
  }
  throw EtkError("restrict_character: restriction is not a p'-character of the subgroup");
}

namespace {

bool is_cyclic(const grp::GroupTable& g, const grp::Subgroup& q) {
  for (auto x : q.elements)
    if (g.element_order(x) == q.order()) return true;
  return false;
}

}  // namespace

SylowData sylow_data(const grp::GroupTable& g, unsigned p) {
  SylowData s;
  s.prime = p;
  if (g.order() % p != 0) throw EtkError("sylow_data: p does not divide the group order");
  s.p = grp::sylow(g, p);
  s.n = grp::normalizer(g, s.p);
  s.n_table = grp::make_subgroup_table(g, s.n);
  s.type = grp::classify_2group(g, s.p);
  for (auto& q : grp::subgroups_up_to_conj(g, s.p)) {
    if (q.order() == 1) continue;
    if (is_cyclic(g, q)) s.cyclic.push_back(q);
    s.nontrivial.push_back(std::move(q));
  }
  return s;
}

Correspondent green_correspondent(const split::HeckeEnd& h, const grp::Subgroup& p, std::uint64_t seed) {
  Correspondent c;
  c.decomposition = split::split_summands(h, seed);
  c.hecke_dim = h.dim();
  c.induced_dim = h.induced().dim();
  std::size_t found = 0;
  for (std::size_t i = 0; i < c.decomposition.summands.size(); ++i)
    if (modrep::brauer_quotient(c.decomposition.summands[i].module, p).dim > 0) {
      c.index = i;
      ++found;
    }
  if (found != 1)
    throw EtkError("green_correspondent: " + std::to_string(found) +
                   " summands with nonzero Brauer quotient at the Sylow subgroup (expected 1)");
  return c;
}

CharTest is_endotrivial_char(const ModuleRep& u, const SylowData& s) {
  CharTest t;
  t.endotrivial = true;
  for (const auto& q : s.cyclic) {
    t.witness.push_back(modrep::brauer_quotient(u, q).dim);
    t.endotrivial = t.endotrivial && t.witness.back() == 1;
  }
  return t;
}

bool is_endotrivial_direct(const ModuleRep& u, const SylowData& s) {
  const ModuleRep e = modrep::tensor(modrep::dual(u), u);
  for (const auto& q : s.nontrivial)
    if (modrep::brauer_quotient(e, q).dim != 1) return false;
  if (e.dim() % s.p.order() != 1)
    throw EtkError("is_endotrivial_direct: Brauer quotients are one-dimensional but dim End is not 1 mod |P|");
  return true;
}

TensorPowerClass tensor_power_class(const ModuleRep& v, unsigned n, const SylowData& s, const modrep::XPtr& xg,
                                    const modrep::XPtr& xn) {
  if (n == 0) throw EtkError("tensor_power_class: n must be positive");
  TensorPowerClass out;
  out.n = n;
  ModuleRep t = v;
  for (unsigned i = 1; i < n; ++i) t = modrep::tensor(t, v);
  out.dim = t.dim();
  for (const auto& q : s.nontrivial) out.brauer_vector.push_back(modrep::brauer_quotient(t, q).dim);
  out.brauer_all_ones =
      std::all_of(out.brauer_vector.begin(), out.brauer_vector.end(), [](std::size_t d) { return d == 1; });
  if (!out.brauer_all_ones) return out;

  // N acts on T(P) by the restriction of the one-dimensional summand.
  const auto& nt = *s.n_table.table;
  std::vector<std::size_t> acting;
  for (std::size_t g = 0; g < nt.num_generators(); ++g) acting.push_back(s.n_table.parent_index(nt.generator(g)));
  const auto bq = modrep::brauer_quotient(t, s.p, acting);
  const auto chars_n = modrep::all_characters(xn);
  std::optional<std::size_t> lambda;
  for (std::size_t i = 0; i < chars_n.size() && !lambda; ++i) {
    bool same = true;
    for (std::size_t g = 0; g < nt.num_generators() && same; ++g)
      same = chars_n[i].value(nt.generator(g), *v.field()) == bq.actions[g](0, 0);
    if (same) lambda = i;
  }
  if (!lambda) throw EtkError("tensor_power_class: N acts on T(P) by a character outside X(N)");
  out.n_index = lambda;
  const auto chars_g = modrep::all_characters(xg);
  for (std::size_t i = 0; i < chars_g.size(); ++i)
    if (restrict_character(chars_g[i], s.n_table, xn) == *lambda) {
      if (out.x_index) throw EtkError("tensor_power_class: restriction X(G) -> X(N) is not injective");
      out.x_index = i;
      out.order = chars_g[i].order();
    }
  return out;
}

}  // namespace etk::core
