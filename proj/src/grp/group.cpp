#include "etk/grp/group.hpp"

#include <algorithm>

namespace etk::grp {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

GroupTable GroupTable::enumerate(std::vector<GElement> generators, std::size_t cap) {
  if (generators.empty()) throw GroupError("enumerate: no generators");
  for (const auto& g : generators)
    if (g.kind() != generators.front().kind() || g.degree() != generators.front().degree())
      throw GroupError("enumerate: mixed element kinds");

  GroupTable t;
  const std::size_t k = generators.size();
  GElement id = generators.front().identity_like();
  t.elements_.push_back(id);
  t.index_.emplace(id.key(), 0);
  t.parent_.push_back(0);
  t.parent_gen_.push_back(0);

  // Breadth-first closure under right multiplication by generators.
  for (std::size_t i = 0; i < t.elements_.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      GElement y = t.elements_[i] * generators[s];
      auto [it, inserted] = t.index_.emplace(y.key(), t.elements_.size());
      if (inserted) {
        if (t.elements_.size() >= cap)
          throw GroupError("group order exceeds cap of " + std::to_string(cap) + " elements");
        t.elements_.push_back(std::move(y));
        t.parent_.push_back(i);
        t.parent_gen_.push_back(s);
      }
      t.cayley_.push_back(it->second);
    }
  }
  for (const auto& g : generators) t.generators_.push_back(t.index_.at(g.key()));

  const std::size_t n = t.elements_.size();
  t.inverse_.assign(n, npos);
  for (std::size_t i = 0; i < n; ++i) {
    if (t.inverse_[i] != npos) continue;
    const std::size_t j = t.index_.at(t.elements_[i].inverse().key());
    t.inverse_[i] = j;
    t.inverse_[j] = i;
  }

  const auto primes = prime_factors(n);
  t.orders_.assign(n, 1);
  for (std::size_t i = 1; i < n; ++i) {
    std::uint64_t ord = n;
    for (auto ell : primes)
      while (ord % ell == 0 && t.power(i, ord / ell) == 0) ord /= ell;
    t.orders_[i] = ord;
  }
  return t;
}

std::size_t GroupTable::mul(std::size_t a, std::size_t b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const GElement c = elements_[a] * elements_[b];
  auto it = index_.find(c.key());
  if (it == index_.end()) throw GroupError("closure violated: product not in group");
  return it->second;
}

std::size_t GroupTable::power(std::size_t a, std::uint64_t k) const {
  std::size_t result = 0, base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

std::size_t GroupTable::find(const GElement& g) const {
  auto it = index_.find(g.key());
  return it == index_.end() ? npos : it->second;
}

std::vector<std::size_t> GroupTable::word(std::size_t i) const {
  std::vector<std::size_t> w;
  while (i != 0) {
    w.push_back(parent_gen_[i]);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

bool Subgroup::contains(std::size_t g) const { return std::binary_search(elements.begin(), elements.end(), g); }

SubgroupTable make_subgroup_table(const GroupTable& g, const Subgroup& s) {
  SubgroupTable st;
  std::vector<GElement> gens;
  for (auto x : s.generators) gens.push_back(g.element(x));
  if (gens.empty()) gens.push_back(g.element(0));
  st.table = std::make_shared<const GroupTable>(GroupTable::enumerate(std::move(gens), std::max<std::size_t>(s.order() + 1, 2)));
  if (st.table->order() != s.order()) throw GroupError("make_subgroup_table: generators do not generate the subgroup");
  st.to_parent.resize(st.table->order());
  st.from_parent.assign(g.order(), -1);
  for (std::size_t i = 0; i < st.table->order(); ++i) {
    const std::size_t pi = g.find(st.table->element(i));
    if (pi == GroupTable::npos || !s.contains(pi)) throw GroupError("make_subgroup_table: element outside subgroup");
    st.to_parent[i] = pi;
    st.from_parent[pi] = static_cast<std::ptrdiff_t>(i);
  }
  st.in_parent = s;
  return st;
}

}  // namespace etk::grp
