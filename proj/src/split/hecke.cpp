#include "etk/split/hecke.hpp"

#include "etk/ffla/linalg.hpp"

#include <random>

#include "etk/ffla/kernels.hpp"

namespace etk::split {

HeckeEnd::HeckeEnd(grp::GroupPtr g, const grp::SubgroupTable& n, const modrep::LinearCharacter& lambda, Field field)
    : g_(std::move(g)), field_(std::move(field)) {
  if (lambda.group() != n.table) throw SplitError("HeckeEnd: character is not defined on the subgroup table");
  const auto& G = *g_;
  const auto& nel = n.in_parent.elements;
  m_ = lambda.structure()->exponent();
  if ((field_->q() - 1) % m_) throw SplitError("HeckeEnd: field lacks the character values");
  transversal_ = modrep::right_transversal(G, n.in_parent);
  induced_.emplace(modrep::induce(modrep::one_dim_module(lambda, field_), g_, n, transversal_));

  std::vector<std::uint32_t> lam(nel.size());
  for (std::size_t i = 0; i < nel.size(); ++i) lam[i] = lambda.exponent_at(static_cast<std::size_t>(n.sub_index(nel[i])));

  // Double cosets with consistency of f(n1 x n2) = lambda(n1) lambda(n2).
  const std::ptrdiff_t unset = -1;
  std::vector<std::ptrdiff_t> coset(G.order(), unset);
  phase_.assign(G.order(), 0);
  std::vector<char> is_good;
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (coset[x] != unset) continue;
    const auto id = static_cast<std::ptrdiff_t>(reps_.size());
    reps_.push_back(x);
    bool good = true;
    for (std::size_t a = 0; a < nel.size(); ++a) {
      const std::size_t ax = G.mul(nel[a], x);
      for (std::size_t b = 0; b < nel.size(); ++b) {
        const std::size_t y = G.mul(ax, nel[b]);
        const std::uint32_t k = (lam[a] + lam[b]) % m_;
        if (coset[y] == unset) {
          coset[y] = id;
          phase_[y] = k;
        } else if (phase_[y] != k) {
          good = false;
        }
      }
    }
    is_good.push_back(good);
  }
  std::vector<std::ptrdiff_t> basis_index(reps_.size(), -1);
  for (std::size_t c = 0; c < reps_.size(); ++c)
    if (is_good[c]) {
      basis_index[c] = static_cast<std::ptrdiff_t>(good_.size());
      good_.push_back(c);
    }
  basis_of_.resize(G.order());
  for (std::size_t x = 0; x < G.order(); ++x) basis_of_[x] = basis_index[coset[x]];

  // Structure constants: (f_a * f_b)(x_c) = sum_j f_a(x_c t_j^-1) f_b(t_j).
  const std::size_t d = good_.size();
  const auto& F = *field_;
  const auto& t = transversal_.reps;
  std::vector<FMatrix> left(d, FMatrix(field_, d, d));
  for (std::size_t c = 0; c < d; ++c) {
    const std::size_t xc = reps_[good_[c]];
    for (std::size_t j = 0; j < t.size(); ++j) {
      const std::size_t z = G.mul(xc, G.inv(t[j]));
      const auto a = basis_of_[z], b = basis_of_[t[j]];
      if (a < 0 || b < 0) continue;
      auto& entry = left[static_cast<std::size_t>(a)](c, static_cast<std::size_t>(b));
      entry = F.add(entry, F.mul(value(z), value(t[j])));
    }
  }
  Vec one(d, 0);
  one[0] = 1;  // the double coset N itself
  algebra_.emplace(field_, std::move(left), std::move(one));

  const std::size_t r = t.size();
  pair_elem_.resize(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) pair_elem_[i * r + j] = G.mul(t[i], G.inv(t[j]));
}

Elem HeckeEnd::value(std::size_t x) const {
  if (basis_of_[x] < 0) return 0;
  if (phase_[x] == 0) return 1;
  return field_->pow(field_->root_of_unity(m_), phase_[x]);
}

std::vector<std::size_t> HeckeEnd::basis_representatives() const {
  std::vector<std::size_t> out;
  for (auto c : good_) out.push_back(reps_[c]);
  return out;
}

FMatrix HeckeEnd::realize(std::span<const Elem> x) const {
  const std::size_t r = transversal_.reps.size();
  FMatrix m(field_, r, r);
  const auto& F = *field_;
  for (std::size_t k = 0; k < r * r; ++k) {
    const std::size_t y = pair_elem_[k];
    const auto b = basis_of_[y];
    if (b < 0) continue;
    const Elem c = x[static_cast<std::size_t>(b)];
    if (c) m.data()[k] = F.mul(c, value(y));
  }
  return m;
}

FMatrix HeckeEnd::realize_basis(std::size_t c) const { return realize(algebra_->basis_vector(c)); }

bool HeckeEnd::verify(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  const auto& F = *field_;
  const std::size_t r = transversal_.reps.size(), d = dim();
  auto random_vec = [&] {
    Vec v(r);
    for (auto& x : v) x = static_cast<Elem>(rng() % F.q());
    return v;
  };
  if (!realize(algebra_->one()).is_identity()) return false;
  std::vector<FMatrix> real;
  for (std::size_t c = 0; c < d; ++c) real.push_back(realize_basis(c));
  // Linear independence of the realized basis.
  FMatrix flat(field_, 0, r * r);
  for (const auto& m : real) flat.append_row(m.data());
  if (ffla::rank(flat) != d) return false;
  for (int trial = 0; trial < 3; ++trial) {
    const Vec v = random_vec();
    for (std::size_t c = 0; c < d; ++c)
      for (const auto& s : induced_->generators())
        if (ffla::mul_vec(real[c], ffla::mul_vec(s, v)) != ffla::mul_vec(s, ffla::mul_vec(real[c], v))) return false;
    std::vector<Vec> av(d);
    for (std::size_t c = 0; c < d; ++c) av[c] = ffla::mul_vec(real[c], v);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const Vec lhs = ffla::mul_vec(real[a], av[b]);
        Vec rhs(r, 0);
        const auto& l = algebra_->left(a);
        for (std::size_t c = 0; c < d; ++c)
          if (const Elem k = l(c, b)) ffla::kernels::axpy(F, rhs.data(), av[c].data(), k, r);
        if (lhs != rhs) return false;
      }
  }
  return true;
}

std::size_t mackey_dimension(const grp::GroupTable& g, const grp::SubgroupTable& n,
                             const modrep::LinearCharacter& lambda) {
  // Double cosets as orbits of N x N acting by left and right multiplication
  // with the generators of N.
  const auto& ngens = n.in_parent.generators;
  std::vector<char> seen(g.order(), 0);
  auto lam = [&](std::size_t x) { return lambda.exponent_at(static_cast<std::size_t>(n.sub_index(x))); };
  std::size_t total = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (auto s : ngens)
        for (auto y : {g.mul(s, orbit[i]), g.mul(orbit[i], s)})
          if (!seen[y]) {
            seen[y] = 1;
            orbit.push_back(y);
          }
    // <lambda, lambda^x> on N cap x^-1 N x.
    bool agree = true;
    const std::size_t xi = g.inv(x);
    for (auto h : n.in_parent.elements) {
      const std::size_t c = g.mul(g.mul(x, h), xi);
      if (n.sub_index(c) < 0) continue;
      if (lam(h) != lam(c)) {
        agree = false;
        break;
      }
    }
    total += agree;
  }
  return total;
}

}  // namespace etk::split
