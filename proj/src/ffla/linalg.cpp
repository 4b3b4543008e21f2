#include "etk/ffla/linalg.hpp"

#include <algorithm>

#include "etk/ffla/kernels.hpp"

namespace etk::ffla {

Echelon gauss(const FMatrix& m) {
  Echelon out;
  out.rref = m;
  out.pivots = kernels::row_reduce(out.rref);
  out.rank = out.pivots.size();
  const auto& F = m.F();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : out.pivots) is_pivot[c] = true;
  out.kernel = FMatrix(m.field(), 0, n);
  std::vector<Elem> v(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), Elem{0});
    v[f] = 1;
    for (std::size_t r = 0; r < out.rank; ++r) v[out.pivots[r]] = F.neg(out.rref(r, f));
    out.kernel.append_row(v);
  }
  return out;
}

std::size_t rank(const FMatrix& m) {
  FMatrix work = m;
  return kernels::row_reduce(work).size();
}

FMatrix nullspace(const FMatrix& m) { return gauss(m).kernel; }

FMatrix left_nullspace(const FMatrix& m) { return gauss(m.transpose()).kernel; }

FMatrix row_basis(const FMatrix& m) {
  FMatrix work = m;
  const auto r = kernels::row_reduce(work).size();
  return work.row_range(0, r);
}

FMatrix column_basis(const FMatrix& m) { return row_basis(m.transpose()); }

std::optional<FMatrix> inverse(const FMatrix& m) {
  if (!m.square()) return std::nullopt;
  const std::size_t n = m.rows();
  FMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy_n(m.row(i), n, aug.row(i));
    aug(i, n + i) = 1;
  }
  auto piv = kernels::row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  FMatrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) std::copy_n(aug.row(i) + n, n, inv.row(i));
  return inv;
}

FMatrix invert(const FMatrix& m) {
  auto inv = inverse(m);
  if (!inv) throw MatrixError("matrix is singular");
  return *inv;
}

std::optional<std::vector<Elem>> solve(const FMatrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) throw MatrixError("solve: length mismatch");
  const std::size_t n = a.cols();
  FMatrix aug(a.field(), a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy_n(a.row(i), n, aug.row(i));
    aug(i, n) = b[i];
  }
  auto piv = kernels::row_reduce(aug);
  std::vector<Elem> x(n, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == n) return std::nullopt;
    x[piv[r]] = aug(r, n);
  }
  return x;
}

FMatrix intersect(const FMatrix& u, const FMatrix& w) {
  if (u.rows() == 0 || w.rows() == 0) return FMatrix(u.field(), 0, u.cols());
  // x in U ∩ W  <=>  x = a U = b W ; solve [U; -W]^T-style via left nullspace of [U; W].
  FMatrix stacked = vstack(u, w);
  FMatrix rel = left_nullspace(stacked);  // rows (a | b) with a U + b W = 0
  FMatrix a = FMatrix(u.field(), rel.rows(), u.rows());
  for (std::size_t i = 0; i < rel.rows(); ++i) std::copy_n(rel.row(i), u.rows(), a.row(i));
  return row_basis(a * u);
}

EchelonSpace::EchelonSpace(Field field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

void EchelonSpace::reduce(std::vector<Elem>& v) const {
  const auto& F = *field_;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Elem c = v[pivots_[k]];
    if (c != 0) kernels::axpy(F, v.data(), rows_[k].data(), F.neg(c), ambient_);
  }
}

bool EchelonSpace::contains(std::span<const Elem> v) const {
  std::vector<Elem> w(v.begin(), v.end());
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

bool EchelonSpace::add(std::span<const Elem> v) {
  if (v.size() != ambient_) throw MatrixError("EchelonSpace: length mismatch");
  std::vector<Elem> w(v.begin(), v.end());
  reduce(w);
  auto it = std::find_if(w.begin(), w.end(), [](Elem x) { return x != 0; });
  if (it == w.end()) return false;
  const std::size_t piv = static_cast<std::size_t>(it - w.begin());
  kernels::scale_row(*field_, w.data(), field_->inv(w[piv]), ambient_);
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

FMatrix EchelonSpace::matrix() const {
  FMatrix m(field_, 0, ambient_);
  for (const auto& r : rows_) m.append_row(r);
  return m;
}

}  // namespace etk::ffla
