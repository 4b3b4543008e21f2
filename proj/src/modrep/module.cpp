#include "etk/modrep/module.hpp"

#include <random>

#include "etk/ffla/kernels.hpp"
#include "etk/ffla/linalg.hpp"

namespace etk::modrep {

ModuleRep::ModuleRep(GroupPtr group, Field field, std::size_t dim, std::vector<FMatrix> gens)
    : group_(std::move(group)), field_(std::move(field)), dim_(dim), gens_(std::move(gens)) {
  if (gens_.size() != group_->num_generators()) throw ModuleError("ModuleRep: one matrix per generator required");
  for (const auto& m : gens_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw ModuleError("ModuleRep: generator matrix has wrong shape");
    if (!ffla::same_field(m.field(), field_)) throw ModuleError("ModuleRep: generator matrix over another field");
  }
}

FMatrix ModuleRep::act(std::size_t g) const {
  if (eval_) return eval_(g);
  FMatrix r = FMatrix::identity(field_, dim_);
  bool first = true;
  for (auto s : group_->word(g)) {
    r = first ? gens_[s] : r * gens_[s];
    first = false;
  }
  return r;
}

std::vector<Elem> ModuleRep::act_vec(std::size_t g, std::span<const Elem> v) const {
  if (eval_) return ffla::mul_vec(eval_(g), v);
  std::vector<Elem> w(v.begin(), v.end());
  const auto word = group_->word(g);
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = ffla::mul_vec(gens_[*it], w);
  return w;
}

bool ModuleRep::check_relations(std::uint64_t seed, int trials) const {
  std::mt19937_64 rng(seed);
  const auto& F = *field_;
  for (int t = 0; t < trials; ++t) {
    const std::size_t a = rng() % group_->order(), b = rng() % group_->order();
    std::vector<Elem> v(dim_);
    for (auto& x : v) x = static_cast<Elem>(rng() % F.q());
    if (act_vec(a, act_vec(b, v)) != act_vec(group_->mul(a, b), v)) return false;
  }
  return true;
}

ModuleRep trivial_module(GroupPtr g, Field f) {
  std::vector<FMatrix> gens(g->num_generators(), FMatrix::identity(f, 1));
  return ModuleRep(std::move(g), std::move(f), 1, std::move(gens));
}

ModuleRep one_dim_module(const LinearCharacter& lambda, Field f) {
  const auto& g = lambda.group();
  const std::uint32_t m = lambda.structure()->exponent();
  if ((f->q() - 1) % m) throw ModuleError("one_dim_module: field " + f->name() + " lacks roots of unity of order " + std::to_string(m));
  std::vector<FMatrix> gens;
  for (auto s : g->generators()) gens.push_back(FMatrix::scalar(f, 1, lambda.value(s, *f)));
  return ModuleRep(g, std::move(f), 1, std::move(gens));
}

ModuleRep permutation_module(GroupPtr g, Field f) {
  if (g->kind() != grp::GElement::Kind::permutation) throw ModuleError("permutation_module: not a permutation group");
  const std::size_t n = g->element(0).degree();
  std::vector<FMatrix> gens;
  for (auto s : g->generators()) {
    FMatrix m(f, n, n);
    const auto& img = g->element(s).images();
    // Row i has its 1 in column i^g, so rho(g) e_i = e_{i^(g^-1)} and rho is a
    // homomorphism for left-to-right composition.
    for (std::size_t i = 0; i < n; ++i) m(i, img[i]) = 1;
    gens.push_back(std::move(m));
  }
  return ModuleRep(std::move(g), std::move(f), n, std::move(gens));
}

RightTransversal right_transversal(const grp::GroupTable& g, const grp::Subgroup& n) {
  RightTransversal t;
  const std::size_t none = grp::GroupTable::npos;
  t.coset_of.assign(g.order(), none);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (t.coset_of[x] != none) continue;
    const std::size_t id = t.reps.size();
    t.reps.push_back(x);
    for (auto y : n.elements) {
      const std::size_t z = g.mul(y, x);
      if (t.coset_of[z] != none) throw ModuleError("right_transversal: cosets overlap");
      t.coset_of[z] = id;
    }
  }
  return t;
}

ModuleRep induce(const ModuleRep& m, GroupPtr g, const grp::SubgroupTable& n) {
  return induce(m, g, n, right_transversal(*g, n.in_parent));
}

ModuleRep induce(const ModuleRep& m, GroupPtr g, const grp::SubgroupTable& n, const RightTransversal& t) {
  if (m.group() != n.table) throw ModuleError("induce: module is not over the given subgroup table");
  const std::size_t r = t.reps.size(), d = m.dim();
  const auto& F = m.field();
  std::vector<FMatrix> cache(n.table->order());
  std::vector<char> have(n.table->order(), 0);
  auto block = [&](std::size_t parent_n) -> const FMatrix& {
    const auto sub = n.sub_index(parent_n);
    if (sub < 0) throw ModuleError("induce: transversal inconsistency");
    if (!have[sub]) {
      cache[sub] = m.act(static_cast<std::size_t>(sub));
      have[sub] = 1;
    }
    return cache[sub];
  };
  std::vector<FMatrix> gens;
  for (auto s : g->generators()) {
    FMatrix big(F, r * d, r * d);
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t y = g->mul(t.reps[i], s);
      const std::size_t j = t.coset_of[y];
      const FMatrix& b = block(t.n_part(*g, y));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t c = 0; c < d; ++c) big(i * d + a, j * d + c) = b(a, c);
    }
    gens.push_back(std::move(big));
  }
  return ModuleRep(std::move(g), F, r * d, std::move(gens));
}

ModuleRep restrict(const ModuleRep& m, const grp::SubgroupTable& s) {
  std::vector<FMatrix> gens;
  for (auto x : s.table->generators()) gens.push_back(m.act(s.parent_index(x)));
  return ModuleRep(s.table, m.field(), m.dim(), std::move(gens));
}

ModuleRep tensor(const ModuleRep& a, const ModuleRep& b) {
  if (a.group() != b.group()) throw ModuleError("tensor: modules over different groups");
  if (!ffla::same_field(a.field(), b.field())) throw ModuleError("tensor: field mismatch");
  std::vector<FMatrix> gens;
  for (std::size_t s = 0; s < a.generators().size(); ++s) gens.push_back(ffla::kron(a.gen(s), b.gen(s)));
  ModuleRep t(a.group(), a.field(), a.dim() * b.dim(), std::move(gens));
  t.set_evaluator([a, b](std::size_t g) { return ffla::kron(a.act(g), b.act(g)); });
  return t;
}

ModuleRep dual(const ModuleRep& m) {
  std::vector<FMatrix> gens;
  for (const auto& x : m.generators()) gens.push_back(ffla::invert(x).transpose());
  ModuleRep d(m.group(), m.field(), m.dim(), std::move(gens));
  d.set_evaluator([m](std::size_t x) { return m.act(m.G().inv(x)).transpose(); });
  return d;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
  if (a.group() != b.group()) throw ModuleError("direct_sum: modules over different groups");
  if (!ffla::same_field(a.field(), b.field())) throw ModuleError("direct_sum: field mismatch");
  const std::size_t n = a.dim() + b.dim();
  std::vector<FMatrix> gens;
  for (std::size_t s = 0; s < a.generators().size(); ++s) {
    FMatrix m(a.field(), n, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.gen(s)(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b.gen(s)(i, j);
    gens.push_back(std::move(m));
  }
  return ModuleRep(a.group(), a.field(), n, std::move(gens));
}

ModuleRep extend_scalars(const ModuleRep& m, const ffla::FieldEmbedding& emb) {
  if (!ffla::same_field(m.field(), emb.from())) throw ModuleError("extend_scalars: embedding source mismatch");
  std::vector<FMatrix> gens;
  for (const auto& x : m.generators()) {
    FMatrix y(emb.to(), x.rows(), x.cols());
    for (std::size_t i = 0; i < x.data().size(); ++i) y.data()[i] = emb(x.data()[i]);
    gens.push_back(std::move(y));
  }
  return ModuleRep(m.group(), emb.to(), m.dim(), std::move(gens));
}

ModuleRep submodule(const ModuleRep& m, const FMatrix& basis) {
  auto ech = ffla::gauss(basis);
  const std::size_t k = ech.rank;
  const FMatrix b = ech.rref.row_range(0, k);
  const auto& F = *m.field();
  std::vector<FMatrix> gens;
  for (const auto& g : m.generators()) {
    // Columns of the image g * b^T, read off at the pivots of b.
    const FMatrix img = (b * g.transpose());  // row j = (g b_j)^T
    FMatrix x(m.field(), k, k);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Elem> rest(img.row(j), img.row(j) + m.dim());
      for (std::size_t i = 0; i < k; ++i) {
        const Elem c = rest[ech.pivots[i]];
        x(i, j) = c;
        if (c) ffla::kernels::axpy(F, rest.data(), b.row(i), F.neg(c), m.dim());
      }
      for (auto v : rest)
        if (v) throw ModuleError("submodule: subspace is not invariant");
    }
    gens.push_back(std::move(x));
  }
  return ModuleRep(m.group(), m.field(), k, std::move(gens));
}

ModuleRep quotient_module(const ModuleRep& m, const FMatrix& basis) {
  auto ech = ffla::gauss(basis);
  const std::size_t k = ech.rank, n = m.dim();
  const FMatrix b = ech.rref.row_range(0, k);
  std::vector<char> is_pivot(n, 0);
  for (std::size_t i = 0; i < k; ++i) is_pivot[ech.pivots[i]] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  const auto& F = *m.field();
  std::vector<FMatrix> gens;
  for (const auto& g : m.generators()) {
    const FMatrix gt = g.transpose();  // row c = column c of g
    FMatrix x(m.field(), free.size(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
      std::vector<Elem> w(gt.row(free[j]), gt.row(free[j]) + n);
      for (std::size_t i = 0; i < k; ++i)
        if (const Elem c = w[ech.pivots[i]]) ffla::kernels::axpy(F, w.data(), b.row(i), F.neg(c), n);
      for (std::size_t i = 0; i < free.size(); ++i) x(i, j) = w[free[i]];
    }
    gens.push_back(std::move(x));
  }
  return ModuleRep(m.group(), m.field(), free.size(), std::move(gens));
}

}  // namespace etk::modrep
