#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "etk/ffla/linalg.hpp"
#include "etk/grp/algorithms.hpp"
#include "etk/modrep/brauer.hpp"
#include "etk/split/algebra.hpp"

namespace etk::oracles {

using ffla::Elem;
using ffla::FMatrix;

namespace {

void record(OracleResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (ok) return;
  if (!r.failures++) r.first_failure = what;
}

FMatrix flatten(const FMatrix& m) { return FMatrix(m.field(), 1, m.rows() * m.cols(), m.data()); }

std::vector<FMatrix> generated_algebra(const std::vector<FMatrix>& gens, std::size_t cap) {
  const auto f = gens.front().field();
  const std::size_t n = gens.front().rows();
  ffla::EchelonSpace span(f, n * n);
  std::vector<FMatrix> basis;
  auto push = [&](const FMatrix& m) {
    if (span.add(flatten(m).row_span(0))) basis.push_back(m);
  };
  push(FMatrix::identity(f, n));
  for (const auto& g : gens) push(g);
  for (std::size_t i = 0; i < basis.size() && basis.size() <= cap; ++i)
    for (const auto& g : gens) push(basis[i] * g);
  if (basis.size() > cap) return {};
  return basis;
}

bool nilpotent(const FMatrix& m) {
  FMatrix p = m;
  for (std::size_t i = 1; i < m.rows(); ++i) p = p * m;
  return p.is_zero();
}

// Coordinates of every x with y x nilpotent for all y, by enumerating the
// whole algebra.
std::vector<std::vector<Elem>> brute_radical(const std::vector<FMatrix>& basis) {
  const auto f = basis.front().field();
  const unsigned q = f->q();
  const std::size_t d = basis.size();
  std::vector<FMatrix> elems;
  std::vector<std::vector<Elem>> coords;
  std::vector<Elem> c(d, 0);
  while (true) {
    FMatrix m(f, basis[0].rows(), basis[0].cols());
    for (std::size_t i = 0; i < d; ++i)
      if (c[i]) m = m + ffla::scale(basis[i], c[i]);
    elems.push_back(std::move(m));
    coords.push_back(c);
    std::size_t i = 0;
    while (i < d && ++c[i] == q) c[i++] = 0;
    if (i == d) break;
  }
  std::vector<std::vector<Elem>> out;
  for (std::size_t k = 0; k < elems.size(); ++k)
    if (std::all_of(elems.begin(), elems.end(), [&](const FMatrix& y) { return nilpotent(y * elems[k]); }))
      out.push_back(coords[k]);
  return out;
}

// Random permutation group of degree 4..8 with order at most 2000 and even order.
grp::GroupPtr random_perm_group(std::mt19937_64& rng) {
  while (true) {
    const std::size_t n = 4 + rng() % 5;
    std::vector<grp::GElement> gens;
    const std::size_t k = 1 + rng() % 2;
    for (std::size_t s = 0; s < k; ++s) {
      std::vector<std::uint32_t> img(n);
      for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
      // Sparse permutations keep orders small and fixed points common.
      const std::size_t swaps = 1 + rng() % 3;
      for (std::size_t t = 0; t < swaps; ++t) std::swap(img[rng() % n], img[rng() % n]);
      gens.push_back(grp::GElement::permutation(img));
    }
    try {
      auto g = std::make_shared<const grp::GroupTable>(grp::GroupTable::enumerate(gens, 2000));
      if (g->order() % 2 == 0) return g;
    } catch (const grp::GroupError&) {
    }
  }
}

std::size_t fixed_point_count(const grp::GroupTable& g, const grp::Subgroup& q) {
  const std::size_t n = g.element(0).degree();
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    c += std::all_of(q.generators.begin(), q.generators.end(),
                     [&](std::size_t s) { return g.element(s).images()[i] == i; });
  return c;
}

}  // namespace

OracleResult radical_oracle(std::size_t algebras, std::uint64_t seed) {
  OracleResult r;
  std::mt19937_64 rng(seed);
  while (r.cases < algebras) {
    const unsigned p = (rng() % 2) ? 2 : 3;
    auto f = ffla::FieldTable::make(p, 1);
    const std::size_t n = 2 + rng() % 2;
    std::vector<FMatrix> gens;
    const std::size_t k = 1 + rng() % 2;
    for (std::size_t g = 0; g < k; ++g) {
      FMatrix m(f, n, n);
      const bool tri = rng() % 2;  // upper triangular half the time: radicals are common
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!tri || j >= i) m(i, j) = static_cast<Elem>(rng() % p);
      gens.push_back(m);
    }
    const auto basis = generated_algebra(gens, 5);
    if (basis.empty()) continue;
    const auto a = split::Algebra::from_matrices(basis);
    const FMatrix j = split::radical(a);
    std::size_t size = 1;
    ffla::EchelonSpace span(f, basis.size());
    for (std::size_t i = 0; i < j.rows(); ++i) {
      size *= p;
      span.add(j.row_span(i));
    }
    const auto brute = brute_radical(basis);
    const bool same = brute.size() == size && span.dim() == j.rows() &&
                      std::all_of(brute.begin(), brute.end(), [&](const auto& v) { return span.contains(v); });
    record(r, a.check_axioms() && same,
           "algebra " + std::to_string(r.cases) + " over GF(" + std::to_string(p) + ")");
  }
  return r;
}

OracleResult brauer_fixed_point_oracle(std::size_t modules, std::uint64_t seed) {
  OracleResult r;
  std::mt19937_64 rng(seed);
  auto f = ffla::FieldTable::make(2, 1);
  while (r.cases < modules) {
    const auto g = random_perm_group(rng);
    const auto m = modrep::permutation_module(g, f);
    const auto p = grp::sylow(*g, 2);
    if (p.order() > 64) continue;
    const auto subs = grp::all_subgroups(*g, p);
    const auto& q = subs[rng() % subs.size()];
    const auto bq = modrep::brauer_quotient(m, q);
    record(r, bq.dim == fixed_point_count(*g, q) && modrep::fixed_points(m, q).rows() >= bq.dim,
           "module " + std::to_string(r.cases) + " (|G| = " + std::to_string(g->order()) + ", |Q| = " +
               std::to_string(q.order()) + ")");
  }
  return r;
}

OracleResult jordan_brauer_oracle(std::size_t modules, std::uint64_t seed) {
  OracleResult r;
  std::mt19937_64 rng(seed);
  auto f = ffla::FieldTable::make(2, 1);
  std::size_t built = 0;
  while (built < modules) {
    const auto g = random_perm_group(rng);
    const auto m = modrep::permutation_module(g, f);
    const auto p = grp::sylow(*g, 2);
    if (p.order() > 64) continue;
    // Consume the same random choice as the Brauer oracle so both walk one corpus.
    const auto subs = grp::all_subgroups(*g, p);
    (void)(rng() % subs.size());
    ++built;
    for (auto u : p.elements) {
      if (g->element_order(u) != 2) continue;
      const auto jp = modrep::jordan_profile(m, u);
      const auto bq = modrep::brauer_quotient(m, grp::generate(*g, {u}));
      record(r, jp.size() > 1 && jp[1] == bq.dim,
             "module " + std::to_string(built) + " involution " + std::to_string(u));
    }
  }
  return r;
}

}  // namespace etk::oracles
