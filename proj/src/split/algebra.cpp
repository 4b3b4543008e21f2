#include "etk/split/algebra.hpp"

#include <cmath>

#include "etk/ffla/kernels.hpp"
#include "etk/ffla/linalg.hpp"

namespace etk::split {

namespace {

// Coordinates of vectors in the row space of a reduced echelon basis.
struct Coordinates {
  FMatrix basis;  // rref rows
  std::vector<std::size_t> pivots;

  explicit Coordinates(const FMatrix& rows) {
    auto g = ffla::gauss(rows);
    basis = g.rref.row_range(0, g.rank);
    pivots = g.pivots;
  }
  std::size_t dim() const { return basis.rows(); }
  // Throws unless w lies in the span.
  Vec operator()(std::span<const Elem> w) const {
    const auto& F = basis.F();
    Vec c(dim()), rest(w.begin(), w.end());
    for (std::size_t i = 0; i < dim(); ++i) {
      c[i] = rest[pivots[i]];
      if (c[i]) ffla::kernels::axpy(F, rest.data(), basis.row(i), F.neg(c[i]), rest.size());
    }
    for (auto v : rest)
      if (v) throw SplitError("vector outside the expected subspace");
    return c;
  }
  Vec expand(std::span<const Elem> c) const {
    Vec w(basis.cols(), 0);
    for (std::size_t i = 0; i < dim(); ++i)
      if (c[i]) ffla::kernels::axpy(basis.F(), w.data(), basis.row(i), c[i], w.size());
    return w;
  }
};

// Algebra on a subspace closed under products (rows in ambient coordinates) with unit `unit`.
Algebra subalgebra(const Algebra& a, const Coordinates& sub, std::span<const Elem> unit) {
  std::vector<FMatrix> left;
  const std::size_t m = sub.dim();
  for (std::size_t i = 0; i < m; ++i) {
    FMatrix l(a.field(), m, m);
    const auto bi = sub.basis.row_vector(i);
    for (std::size_t j = 0; j < m; ++j) {
      const auto c = sub(a.mul(bi, sub.basis.row_span(j)));
      for (std::size_t k = 0; k < m; ++k) l(k, j) = c[k];
    }
    left.push_back(std::move(l));
  }
  return Algebra(a.field(), std::move(left), sub(unit));
}

}  // namespace

Algebra::Algebra(Field field, std::vector<FMatrix> left, Vec one)
    : field_(std::move(field)), left_(std::move(left)), one_(std::move(one)) {
  const std::size_t n = left_.size();
  if (one_.size() != n) throw SplitError("Algebra: unit has the wrong length");
  for (const auto& l : left_)
    if (l.rows() != n || l.cols() != n) throw SplitError("Algebra: structure matrix has the wrong shape");
}

Algebra Algebra::from_matrices(const std::vector<FMatrix>& basis) {
  if (basis.empty()) throw SplitError("from_matrices: empty basis");
  const Field f = basis.front().field();
  const std::size_t d = basis.front().rows();
  FMatrix flat(f, 0, d * d);
  for (const auto& b : basis) flat.append_row(b.data());
  Coordinates co(flat);
  if (co.dim() != basis.size()) throw SplitError("from_matrices: basis is linearly dependent");
  // Coordinates with respect to the given basis, not the echelon one.
  const auto change = ffla::invert(ffla::FMatrix(f, basis.size(), basis.size(), [&] {
    std::vector<Elem> m;
    for (const auto& b : basis) {
      auto c = co(b.data());
      m.insert(m.end(), c.begin(), c.end());
    }
    return m;
  }()));
  auto coords = [&](const FMatrix& x) { return ffla::vec_mul(co(x.data()), change); };
  std::vector<FMatrix> left;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    FMatrix l(f, basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto c = coords(basis[i] * basis[j]);
      for (std::size_t k = 0; k < basis.size(); ++k) l(k, j) = c[k];
    }
    left.push_back(std::move(l));
  }
  return Algebra(f, std::move(left), coords(FMatrix::identity(f, d)));
}

Vec Algebra::mul(std::span<const Elem> x, std::span<const Elem> y) const {
  Vec out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!x[i]) continue;
    const auto col = ffla::mul_vec(left_[i], y);
    ffla::kernels::axpy(*field_, out.data(), col.data(), x[i], dim());
  }
  return out;
}

Vec Algebra::add(std::span<const Elem> x, std::span<const Elem> y) const {
  Vec out(x.begin(), x.end());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = field_->add(out[i], y[i]);
  return out;
}

Vec Algebra::sub(std::span<const Elem> x, std::span<const Elem> y) const {
  Vec out(x.begin(), x.end());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = field_->sub(out[i], y[i]);
  return out;
}

Vec Algebra::scale(std::span<const Elem> x, Elem c) const {
  Vec out(x.begin(), x.end());
  for (auto& v : out) v = field_->mul(v, c);
  return out;
}

Vec Algebra::basis_vector(std::size_t i) const {
  Vec v(dim(), 0);
  v[i] = 1;
  return v;
}

FMatrix Algebra::left_matrix(std::span<const Elem> x) const {
  FMatrix m(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i]) ffla::kernels::axpy(*field_, m.data().data(), left_[i].data().data(), x[i], dim() * dim());
  return m;
}

FMatrix Algebra::right_matrix(std::span<const Elem> x) const {
  FMatrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const auto c = mul(basis_vector(j), x);
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = c[k];
  }
  return m;
}

bool Algebra::is_zero(std::span<const Elem> x) const {
  for (auto v : x)
    if (v) return false;
  return true;
}

Vec Algebra::random_element(std::mt19937_64& rng) const {
  Vec v(dim());
  for (auto& x : v) x = static_cast<Elem>(rng() % field_->q());
  return v;
}

bool Algebra::check_axioms() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    const auto bi = basis_vector(i);
    if (mul(one_, bi) != bi || mul(bi, one_) != bi) return false;
    for (std::size_t j = 0; j < dim(); ++j) {
      const auto bij = mul(bi, basis_vector(j));
      for (std::size_t k = 0; k < dim(); ++k)
        if (mul(bij, basis_vector(k)) != mul(bi, mul(basis_vector(j), basis_vector(k)))) return false;
    }
  }
  return true;
}

FMatrix sandwich_span(const Algebra& a, std::span<const Elem> x, std::span<const Elem> y) {
  ffla::EchelonSpace s(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) s.add(a.mul(a.mul(x, a.basis_vector(i)), y));
  return s.matrix();
}

// ---------------------------------------------------------------------------
// Radical by the trace chain. Over the prime field F_p with a faithful matrix
// representation of degree N, set I_{-1} = A and
//   I_i = { x in I_{i-1} : g_i(x y) = 0 for all y in A },
// where g_i(z) = (Tr(lift(z)^(p^i)) mod p^(i+1)) / p^i with lift(z) the integer
// matrix with entries in [0, p). Then J(A) = I_l for l = floor(log_p N).
// A over GF(p^e) is first viewed as an F_p-algebra of dimension n e, acting on
// itself by left multiplication.

namespace {

using IntMat = std::vector<std::uint64_t>;

IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t n, std::uint64_t mod) {
  IntMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t x = a[i * n + k];
      if (!x) continue;
      const std::uint64_t* br = &b[k * n];
      std::uint64_t* cr = &c[i * n];
      for (std::size_t j = 0; j < n; ++j) cr[j] += x * br[j];
    }
  for (auto& v : c) v %= mod;
  return c;
}

}  // namespace

FMatrix radical(const Algebra& a) {
  const auto& F = *a.field();
  const unsigned p = F.p(), e = F.e();
  const std::size_t n = a.dim();
  if (n > 64) throw SplitError("radical: dimension cap of 64 exceeded");
  const std::size_t N = n * e;
  if (N == 0) return FMatrix(a.field(), 0, 0);

  // Prime-field coordinates: index i*e + k <-> g^k b_i.
  auto to_prime = [&](std::span<const Elem> x) {
    std::vector<std::uint32_t> out(N);
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned k = 0; k < e; ++k) out[i * e + k] = F.digit(x[i], k);
    return out;
  };
  auto from_prime = [&](std::span<const std::uint32_t> c) {
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<unsigned> d(c.begin() + i * e, c.begin() + (i + 1) * e);
      out[i] = F.from_digits(d);
    }
    return out;
  };
  auto prime_basis = [&](std::size_t idx) {
    Vec v(n, 0);
    v[idx / e] = F.exp(idx % e);
    return v;
  };

  // Left multiplication over F_p by each prime basis element.
  std::vector<IntMat> lp(N, IntMat(N * N));
  for (std::size_t a_idx = 0; a_idx < N; ++a_idx) {
    const Vec u = prime_basis(a_idx);
    for (std::size_t b_idx = 0; b_idx < N; ++b_idx) {
      const auto col = to_prime(a.mul(u, prime_basis(b_idx)));
      for (std::size_t r = 0; r < N; ++r) lp[a_idx][r * N + b_idx] = col[r];
    }
  }
  auto left_of = [&](std::span<const std::uint32_t> x) {
    IntMat m(N * N, 0);
    for (std::size_t k = 0; k < N; ++k)
      if (x[k])
        for (std::size_t t = 0; t < N * N; ++t) m[t] += x[k] * lp[k][t];
    for (auto& v : m) v %= p;
    return m;
  };
  auto product = [&](std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) {
    const IntMat l = left_of(x);
    std::vector<std::uint32_t> out(N, 0);
    for (std::size_t r = 0; r < N; ++r) {
      std::uint64_t s = 0;
      for (std::size_t c = 0; c < N; ++c) s += l[r * N + c] * y[c];
      out[r] = static_cast<std::uint32_t>(s % p);
    }
    return out;
  };

  std::size_t l = 0;
  for (std::size_t pw = p; pw <= N; pw *= p) ++l;

  // Current ideal I as a list of prime-field basis vectors.
  std::vector<std::vector<std::uint32_t>> ideal;
  for (std::size_t k = 0; k < N; ++k) {
    std::vector<std::uint32_t> v(N, 0);
    v[k] = 1;
    ideal.push_back(std::move(v));
  }
  auto fp = ffla::FieldTable::make(p, 1);
  for (std::size_t i = 0; i <= l && !ideal.empty(); ++i) {
    std::uint64_t pi = 1;
    for (std::size_t t = 0; t < i; ++t) pi *= p;
    const std::uint64_t mod = pi * p;
    bool divisible = true;
    auto g_i = [&](std::span<const std::uint32_t> z) {
      IntMat m = left_of(z);
      for (std::size_t t = 0; t < i; ++t) {  // m <- m^p, i times
        IntMat r = m;
        for (unsigned k = 1; k < p; ++k) r = int_mul(r, m, N, mod);
        m = std::move(r);
      }
      std::uint64_t tr = 0;
      for (std::size_t d = 0; d < N; ++d) tr += m[d * N + d];
      tr %= mod;
      if (tr % pi) divisible = false;
      return static_cast<Elem>((tr / pi) % p);
    };
    // System M[b][a] = g_i(x_a y_b); I_i is its kernel.
    const std::size_t k = ideal.size();
    FMatrix sys(fp, N, k);
    std::vector<std::vector<std::uint32_t>> ybasis(N, std::vector<std::uint32_t>(N, 0));
    for (std::size_t b = 0; b < N; ++b) ybasis[b][b] = 1;
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(N); ++b)
      for (std::ptrdiff_t aa = 0; aa < static_cast<std::ptrdiff_t>(k); ++aa)
        sys(b, aa) = g_i(product(ideal[aa], ybasis[b]));
    if (!divisible) throw SplitError("radical: trace not divisible as the chain requires");
    const FMatrix ker = ffla::nullspace(sys);
    std::vector<std::vector<std::uint32_t>> next;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      std::vector<std::uint32_t> v(N, 0);
      for (std::size_t aa = 0; aa < k; ++aa)
        if (const auto c = ker(r, aa))
          for (std::size_t t = 0; t < N; ++t) v[t] = (v[t] + c * ideal[aa][t]) % p;
      next.push_back(std::move(v));
    }
    ideal = std::move(next);
  }

  ffla::EchelonSpace j(a.field(), n);
  for (const auto& v : ideal) j.add(from_prime(v));
  if (j.dim() * e != ideal.size()) throw SplitError("radical: result is not a subspace over the full field");
  return ffla::row_basis(j.matrix());
}

// ---------------------------------------------------------------------------

namespace {

bool certify_local(const Algebra& a, const Coordinates& corner, std::span<const Elem> e, std::size_t& rad_dim) {
  const Algebra c = subalgebra(a, corner, e);
  rad_dim = radical(c).rows();
  return corner.dim() - rad_dim == 1;
}

}  // namespace

IdempotentResult primitive_idempotents(const Algebra& a, std::uint64_t seed, int trial_cap) {
  const auto& F = *a.field();
  std::mt19937_64 rng(seed);
  IdempotentResult out;
  std::vector<Vec> todo{a.one()};
  while (!todo.empty()) {
    const Vec e = std::move(todo.back());
    todo.pop_back();
    const Coordinates corner(sandwich_span(a, e, e));
    const std::size_t m = corner.dim();
    if (m == 1) {
      out.idempotents.push_back(e);
      out.corner_dims.push_back(1);
      out.corner_radical_dims.push_back(0);
      continue;
    }
    bool done = false;
    constexpr int kTrialsBeforeCertify = 6;
    for (int trial = 0; trial < trial_cap && !done; ++trial) {
      if (trial == kTrialsBeforeCertify) {
        std::size_t rd = 0;
        if (certify_local(a, corner, e, rd)) {
          out.idempotents.push_back(e);
          out.corner_dims.push_back(m);
          out.corner_radical_dims.push_back(rd);
          done = true;
          break;
        }
      }
      const Vec r = a.random_element(rng);
      const Vec x = a.mul(a.mul(e, r), e);
      // Left multiplication by x restricted to the corner, in corner coordinates.
      FMatrix lx(a.field(), m, m);
      for (std::size_t j = 0; j < m; ++j) {
        const auto c = corner(a.mul(x, corner.basis.row_span(j)));
        for (std::size_t i = 0; i < m; ++i) lx(i, j) = c[i];
      }
      const Vec ec = corner(e);
      for (std::uint32_t cv = 0; cv < F.q() && !done; ++cv) {
        // b = x - c e acts as lx - c I on the corner (e is its unit).
        FMatrix lb = lx;
        for (std::size_t i = 0; i < m; ++i) lb(i, i) = F.sub(lb(i, i), static_cast<Elem>(cv));
        const std::size_t r1 = ffla::rank(lb);
        if (r1 == m || r1 == 0) continue;
        FMatrix t = lb;
        for (std::size_t s = 1; s < m; ++s) t = t * lb;
        const std::size_t rt = ffla::rank(t);
        if (rt == 0 || rt == m) continue;
        // e = f1 + f2 along im T (+) ker T.
        const FMatrix im = ffla::column_basis(t);
        const FMatrix ker = ffla::nullspace(t);
        const FMatrix both = ffla::vstack(im, ker);
        const auto sol = ffla::solve(both.transpose(), ec);
        if (!sol) throw SplitError("primitive_idempotents: Fitting decomposition failed");
        Vec f1c(m, 0);
        for (std::size_t i = 0; i < im.rows(); ++i)
          if ((*sol)[i]) ffla::kernels::axpy(F, f1c.data(), im.row(i), (*sol)[i], m);
        const Vec f1 = corner.expand(f1c);
        const Vec f2 = a.sub(e, f1);
        if (a.mul(f1, f1) != f1 || !a.is_zero(a.mul(f1, f2)) || !a.is_zero(a.mul(f2, f1)))
          throw SplitError("primitive_idempotents: Fitting split produced non-orthogonal idempotents");
        todo.push_back(f1);
        todo.push_back(f2);
        done = true;
      }
    }
    if (!done) {
      std::size_t rd = 0;
      if (certify_local(a, corner, e, rd)) {
        out.idempotents.push_back(e);
        out.corner_dims.push_back(m);
        out.corner_radical_dims.push_back(rd);
        continue;
      }
      // eAe/eJe has dimension r^2 k over F for a matrix algebra over GF(q^k);
      // extending by that degree splits it.
      throw FieldTooSmall("primitive_idempotents: corner of dimension " + std::to_string(m) +
                              " did not split over " + F.name(),
                          static_cast<unsigned>(m - rd));
    }
  }
  // Final assertion of the defining properties.
  Vec sum(a.dim(), 0);
  for (std::size_t i = 0; i < out.idempotents.size(); ++i) {
    sum = a.add(sum, out.idempotents[i]);
    for (std::size_t j = 0; j < out.idempotents.size(); ++j) {
      const auto pr = a.mul(out.idempotents[i], out.idempotents[j]);
      if (i == j ? pr != out.idempotents[i] : !a.is_zero(pr))
        throw SplitError("primitive_idempotents: idempotents not orthogonal");
    }
  }
  if (sum != a.one()) throw SplitError("primitive_idempotents: idempotents do not sum to one");
  return out;
}

bool idempotents_equivalent(const Algebra& a, std::span<const Elem> ei, std::span<const Elem> ej) {
  const FMatrix u = sandwich_span(a, ei, ej);
  const FMatrix v = sandwich_span(a, ej, ei);
  if (u.rows() == 0 || v.rows() == 0) return false;
  const Coordinates corner(sandwich_span(a, ei, ei));
  const Algebra c = subalgebra(a, corner, ei);
  const Coordinates rad(radical(c));
  // Products uv live in e_i A e_i; test them against its radical.
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < v.rows(); ++j) {
      const auto w = corner(a.mul(u.row_span(i), v.row_span(j)));
      if (rad.dim() == 0) {
        for (auto x : w)
          if (x) return true;
        continue;
      }
      Vec rest = w;
      const auto& F = *a.field();
      for (std::size_t r = 0; r < rad.dim(); ++r)
        if (const Elem cc = rest[rad.pivots[r]]) ffla::kernels::axpy(F, rest.data(), rad.basis.row(r), F.neg(cc), rest.size());
      for (auto x : rest)
        if (x) return true;
    }
  return false;
}

}  // namespace etk::split
