#include "etk/grp/algorithms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace etk::grp {

namespace {

// Closure of a generating set, as a membership mask plus element list.
std::vector<std::size_t> closure(const GroupTable& g, const std::vector<std::size_t>& gens,
                                 std::vector<char>& member) {
  member.assign(g.order(), 0);
  std::vector<std::size_t> elems{0};
  member[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto s : gens) {
      const std::size_t y = g.mul(elems[i], s);
      if (!member[y]) {
        member[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

std::uint64_t p_part(std::uint64_t n, unsigned p) {
  std::uint64_t r = 1;
  while (n && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_p_power(std::uint64_t n, unsigned p) { return n >= 1 && p_part(n, p) == n; }

Subgroup trivial_subgroup(const GroupTable&) { return Subgroup{{0}, {}}; }

Subgroup whole_group(const GroupTable& g) {
  Subgroup s;
  s.elements.resize(g.order());
  std::iota(s.elements.begin(), s.elements.end(), std::size_t{0});
  s.generators = g.generators();
  return s;
}

Subgroup generate(const GroupTable& g, std::vector<std::size_t> gens) {
  gens.erase(std::remove(gens.begin(), gens.end(), std::size_t{0}), gens.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<char> member;
  Subgroup s;
  s.elements = closure(g, gens, member);
  s.generators = std::move(gens);
  if (g.order() % s.order()) throw GroupError("Lagrange violated in generate");
  return s;
}

Subgroup from_elements(const GroupTable& g, std::vector<std::size_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<std::size_t> gens;
  std::vector<char> member(g.order(), 0);
  member[0] = 1;
  std::size_t count = 1;
  for (auto x : elements) {
    if (member[x]) continue;
    gens.push_back(x);
    auto cur = closure(g, gens, member);
    count = cur.size();
  }
  if (count != elements.size()) throw GroupError("from_elements: element set is not a subgroup");
  Subgroup s;
  s.elements = std::move(elements);
  s.generators = std::move(gens);
  return s;
}

bool is_subgroup_of(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end());
}

Subgroup normal_closure(const GroupTable& g, const std::vector<std::size_t>& gens) {
  Subgroup h = generate(g, gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < h.generators.size() && !changed; ++i)
      for (auto s : g.generators()) {
        const std::size_t c = g.conj(h.generators[i], s);
        if (!h.contains(c)) {
          auto ng = h.generators;
          ng.push_back(c);
          h = generate(g, ng);
          changed = true;
          break;
        }
      }
  }
  return h;
}

bool is_normal(const GroupTable& g, const Subgroup& s) {
  for (auto x : s.generators)
    for (auto t : g.generators())
      if (!s.contains(g.conj(x, t))) return false;
  return true;
}

Subgroup normalizer(const GroupTable& g, const Subgroup& s) {
  const std::size_t n = g.order();
  std::vector<char> flag(n, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    bool ok = true;
    for (auto x : s.generators)
      if (!s.contains(g.conj(x, static_cast<std::size_t>(i)))) {
        ok = false;
        break;
      }
    flag[i] = ok;
  }
  std::vector<std::size_t> elems;
  for (std::size_t i = 0; i < n; ++i)
    if (flag[i]) elems.push_back(i);
  return from_elements(g, std::move(elems));
}

Subgroup centralizer(const GroupTable& g, const Subgroup& s) {
  const std::size_t n = g.order();
  std::vector<char> flag(n, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    bool ok = true;
    for (auto x : s.generators)
      if (g.mul(x, static_cast<std::size_t>(i)) != g.mul(static_cast<std::size_t>(i), x)) {
        ok = false;
        break;
      }
    flag[i] = ok;
  }
  std::vector<std::size_t> elems;
  for (std::size_t i = 0; i < n; ++i)
    if (flag[i]) elems.push_back(i);
  return from_elements(g, std::move(elems));
}

Subgroup center(const GroupTable& g) { return centralizer(g, whole_group(g)); }

Subgroup conjugate(const GroupTable& g, const Subgroup& s, std::size_t x) {
  Subgroup r;
  for (auto e : s.elements) r.elements.push_back(g.conj(e, x));
  std::sort(r.elements.begin(), r.elements.end());
  for (auto e : s.generators) r.generators.push_back(g.conj(e, x));
  return r;
}

Subgroup sylow(const GroupTable& g, unsigned p) {
  const std::uint64_t target = p_part(g.order(), p);
  if (target == 1) throw GroupError("sylow: p does not divide |G|");
  std::size_t best = 0;
  for (std::size_t i = 1; i < g.order(); ++i)
    if (is_p_power(g.element_order(i), p) && g.element_order(i) > g.element_order(best)) best = i;
  Subgroup s = generate(g, {best});
  while (s.order() < target) {
    const Subgroup n = normalizer(g, s);
    std::size_t add = GroupTable::npos;
    // A p-element of N outside S, chosen with smallest index.
    for (auto x : n.elements)
      if (!s.contains(x) && is_p_power(g.element_order(x), p)) {
        add = x;
        break;
      }
    if (add == GroupTable::npos) throw GroupError("sylow: no p-element in the normalizer outside S");
    auto gens = s.generators;
    gens.push_back(add);
    s = generate(g, gens);
    if (!is_p_power(s.order(), p)) throw GroupError("sylow: extension is not a p-group");
  }
  return s;
}

Subgroup derived_subgroup(const GroupTable& g) {
  std::vector<std::size_t> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const std::size_t a = gens[i], b = gens[j];
      comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }
  return normal_closure(g, comms);
}

ConjugacyClasses conjugacy_classes(const GroupTable& g) {
  ConjugacyClasses cc;
  const std::size_t none = GroupTable::npos;
  cc.class_of.assign(g.order(), none);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (cc.class_of[x] != none) continue;
    const std::size_t id = cc.representatives.size();
    cc.representatives.push_back(x);
    std::vector<std::size_t> orbit{x};
    cc.class_of[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (auto s : g.generators()) {
        const std::size_t y = g.conj(orbit[i], s);
        if (cc.class_of[y] == none) {
          cc.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    cc.sizes.push_back(orbit.size());
  }
  return cc;
}

Subgroup o_pprime(const GroupTable& g, unsigned p) {
  const auto cc = conjugacy_classes(g);
  Subgroup o = trivial_subgroup(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto x : cc.representatives) {
      if (x == 0 || g.element_order(x) % p == 0 || o.contains(x)) continue;
      const Subgroup c = normal_closure(g, {x});
      if (c.order() % p == 0) continue;
      auto gens = o.generators;
      gens.insert(gens.end(), c.generators.begin(), c.generators.end());
      Subgroup bigger = generate(g, gens);
      if (bigger.order() % p == 0) continue;
      o = std::move(bigger);
      changed = true;
    }
  }
  if (!is_normal(g, o)) throw GroupError("o_pprime: result not normal");
  return o;
}

// Subgroups of S handled as 64-bit masks over the positions of S's elements.
namespace {

struct SmallGroup {
  std::vector<std::size_t> elems;  // positions -> indices in G
  std::vector<std::uint8_t> mul;   // position table
  std::size_t n = 0;

  SmallGroup(const GroupTable& g, const Subgroup& s) : elems(s.elements), n(s.order()) {
    if (n > 64) throw GroupError("subgroup enumeration limited to order 64");
    std::map<std::size_t, std::uint8_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[elems[i]] = static_cast<std::uint8_t>(i);
    mul.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = pos.at(g.mul(elems[i], elems[j]));
  }

  std::uint64_t close(std::uint64_t mask) const {
    std::uint64_t cur = mask | 1u;  // position 0 is the identity (sorted, index 0)
    while (true) {
      std::uint64_t next = cur;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(cur >> i & 1)) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (cur >> j & 1) next |= std::uint64_t{1} << mul[i * n + j];
      }
      if (next == cur) return cur;
      cur = next;
    }
  }

  std::vector<std::size_t> to_indices(std::uint64_t mask) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) out.push_back(elems[i]);
    return out;
  }
};

std::vector<std::uint64_t> all_subgroup_masks(const SmallGroup& sg) {
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> cyclic;
  for (std::size_t i = 0; i < sg.n; ++i) {
    const auto m = sg.close(std::uint64_t{1} << i);
    if (seen.insert(m).second) cyclic.push_back(m);
  }
  std::vector<std::uint64_t> list(seen.begin(), seen.end());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto c : cyclic) {
      if ((list[i] | c) == list[i]) continue;
      const auto m = sg.close(list[i] | c);
      if (seen.insert(m).second) list.push_back(m);
    }
  return list;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements < b.elements;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const GroupTable& g, const Subgroup& s) {
  SmallGroup sg(g, s);
  std::vector<Subgroup> out;
  for (auto m : all_subgroup_masks(sg)) out.push_back(from_elements(g, sg.to_indices(m)));
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> subgroups_up_to_conj(const GroupTable& g, const Subgroup& s) {
  auto all = all_subgroups(g, s);
  std::vector<char> taken(all.size(), 0);
  std::vector<Subgroup> reps;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (taken[i]) continue;
    reps.push_back(all[i]);
    for (auto x : s.elements) {
      const Subgroup c = conjugate(g, all[i], x);
      for (std::size_t j = i; j < all.size(); ++j)
        if (!taken[j] && all[j].elements == c.elements) taken[j] = 1;
    }
  }
  return reps;
}

std::vector<Subgroup> maximal_subgroups(const GroupTable& g, const Subgroup& s) {
  auto all = all_subgroups(g, s);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].order() == s.order()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < all.size() && maximal; ++j)
      if (all[j].order() > all[i].order() && all[j].order() < s.order() && is_subgroup_of(all[i], all[j]))
        maximal = false;
    if (maximal) out.push_back(all[i]);
  }
  return out;
}

std::vector<std::size_t> left_coset_reps(const GroupTable& g, const Subgroup& q, const Subgroup& r) {
  std::set<std::size_t> covered;
  std::vector<std::size_t> reps;
  for (auto x : q.elements) {
    if (covered.count(x)) continue;
    reps.push_back(x);
    for (auto y : r.elements) covered.insert(g.mul(x, y));
  }
  return reps;
}

std::string to_string(TwoGroupType t) {
  switch (t) {
    case TwoGroupType::cyclic: return "cyclic";
    case TwoGroupType::klein_four: return "klein_four";
    case TwoGroupType::dihedral: return "dihedral";
    case TwoGroupType::semidihedral: return "semidihedral";
    case TwoGroupType::quaternion: return "quaternion";
    case TwoGroupType::other: return "other";
  }
  return "other";
}

std::string TwoGroupClass::name() const {
  if (type == TwoGroupType::klein_four || type == TwoGroupType::other) return to_string(type);
  return to_string(type) + "(" + std::to_string(order) + ")";
}

TwoGroupClass classify_2group(const GroupTable& g, const Subgroup& p) {
  const std::size_t n = p.order();
  if (!is_p_power(n, 2)) throw GroupError("classify_2group: order is not a power of 2");
  TwoGroupClass c;
  c.order = n;
  if (n == 1) {
    c.type = TwoGroupType::cyclic;
    return c;
  }
  std::size_t involutions = 0, max_order = 1, cyclic_gen = 0;
  for (auto x : p.elements) {
    const std::size_t o = g.element_order(x);
    if (o == 2) ++involutions;
    if (o > max_order) {
      max_order = o;
      cyclic_gen = x;
    }
  }
  if (max_order == n) {
    c.type = TwoGroupType::cyclic;
    return c;
  }
  if (n == 4) {
    c.type = TwoGroupType::klein_four;
    return c;
  }
  if (max_order * 2 != n) return c;  // no cyclic subgroup of index 2

  // Every element outside C = <a> acts on a by a -> a^k with k fixed; the
  // maximal-class types are a^-1 (dihedral, quaternion) and a^(n/4 - 1) (semidihedral).
  const Subgroup cyc = generate(g, {cyclic_gen});
  std::size_t outside = GroupTable::npos;
  for (auto x : p.elements)
    if (!cyc.contains(x)) {
      outside = x;
      break;
    }
  const std::size_t m = max_order;
  const std::size_t image = g.conj(cyclic_gen, outside);
  std::size_t k = 0;
  for (std::size_t j = 0, a = 0; j < m; ++j, a = g.mul(a, cyclic_gen))
    if (a == image) k = j;
  const std::size_t outside_involutions = involutions - 1;  // C holds exactly one involution
  if (k == m - 1) {
    if (outside_involutions == m) c.type = TwoGroupType::dihedral;
    else if (outside_involutions == 0) c.type = TwoGroupType::quaternion;
  } else if (n >= 16 && k == m / 2 - 1 && outside_involutions == m / 2) {
    c.type = TwoGroupType::semidihedral;
  }
  return c;
}

std::size_t AbelianQuotient::size() const {
  std::size_t s = 1;
  for (auto o : orders) s *= o;
  return s;
}

AbelianQuotient abelianization_pprime(const GroupTable& g, unsigned p) {
  // K = [G,G] together with the p-parts of the generators; G/K is the p'-part.
  const Subgroup d = derived_subgroup(g);
  auto kgens = d.generators;
  for (auto s : g.generators()) {
    const std::uint64_t o = g.element_order(s);
    const std::uint64_t pp = p_part(o, p);
    // s^(o/pp * u) with u inverting o/pp mod pp is the p-part of s.
    const std::uint64_t rest = o / pp;
    std::uint64_t u = 0;
    for (std::uint64_t t = 0; t < pp; ++t)
      if ((rest * t) % pp == 1 % pp) {
        u = t;
        break;
      }
    kgens.push_back(g.power(s, rest * u));
  }
  const Subgroup k = normal_closure(g, kgens);

  // Label the cosets gK.
  const std::size_t none = GroupTable::npos;
  std::vector<std::size_t> label(g.order(), none), reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (label[x] != none) continue;
    const std::size_t id = reps.size();
    reps.push_back(x);
    for (auto y : k.elements) label[g.mul(x, y)] = id;
  }
  const std::size_t na = reps.size();
  if (gcd64(na, p) != 1) throw GroupError("abelianization_pprime: quotient has order divisible by p");
  auto amul = [&](std::size_t a, std::size_t b) { return label[g.mul(reps[a], reps[b])]; };
  auto aorder = [&](std::size_t a) {
    std::size_t o = 1;
    for (std::size_t c = a; c != 0; c = amul(c, a)) ++o;
    return o;
  };

  // Greedy basis: pick a class of maximal order modulo the current span and
  // lift it to an element of the same order.
  AbelianQuotient out;
  std::vector<std::vector<std::uint32_t>> span_coord(na);  // coords in the chosen basis so far
  std::vector<char> in_span(na, 0);
  in_span[0] = 1;
  std::vector<std::size_t> span{0};
  std::vector<std::uint32_t> desc_orders;
  std::vector<std::size_t> basis;
  while (span.size() < na) {
    std::size_t best = 0, best_om = 0;
    for (std::size_t y = 0; y < na; ++y) {
      if (in_span[y]) continue;
      std::size_t om = 1;
      for (std::size_t c = y; !in_span[c]; c = amul(c, y)) ++om;
      if (om > best_om) {
        best_om = om;
        best = y;
      }
    }
    std::size_t lift = none;
    for (auto s : span) {
      const std::size_t z = amul(best, s);
      if (aorder(z) == best_om) {
        lift = z;
        break;
      }
    }
    if (lift == none) throw GroupError("abelianization_pprime: basis lift failed");
    std::vector<std::size_t> next;
    std::vector<char> next_in(na, 0);
    std::vector<std::vector<std::uint32_t>> next_coord(na);
    for (auto s : span) {
      std::size_t c = s;
      for (std::uint32_t j = 0; j < best_om; ++j, c = amul(c, lift)) {
        if (next_in[c]) throw GroupError("abelianization_pprime: basis not independent");
        next_in[c] = 1;
        next.push_back(c);
        auto v = span_coord[s];
        v.resize(basis.size(), 0);
        v.push_back(j);
        next_coord[c] = std::move(v);
      }
    }
    span = std::move(next);
    in_span = std::move(next_in);
    span_coord = std::move(next_coord);
    basis.push_back(lift);
    desc_orders.push_back(static_cast<std::uint32_t>(best_om));
  }
  for (auto& v : span_coord) v.resize(basis.size(), 0);

  // Present ascending, d_1 | d_2 | ...
  const std::size_t r = basis.size();
  out.orders.assign(desc_orders.rbegin(), desc_orders.rend());
  out.exponent = desc_orders.empty() ? 1 : desc_orders.front();
  for (std::size_t i = 0; i < r; ++i) out.basis_reps.push_back(reps[basis[r - 1 - i]]);
  out.coords.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto& v = span_coord[label[x]];
    out.coords[x].assign(v.rbegin(), v.rend());
  }
  for (std::size_t i = 1; i < out.orders.size(); ++i)
    if (out.orders[i] % out.orders[i - 1]) throw GroupError("abelianization_pprime: invariant factors not a chain");
  return out;
}

}  // namespace etk::grp
