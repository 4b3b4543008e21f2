#include "etk/modrep/brauer.hpp"

#include "etk/ffla/linalg.hpp"

namespace etk::modrep {

namespace {

FMatrix minus_identity(FMatrix a) {
  const auto& F = a.F();
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) = F.sub(a(i, i), 1);
  return a;
}

}  // namespace

FMatrix fixed_points(const ModuleRep& m, const grp::Subgroup& q) {
  if (q.generators.empty()) return FMatrix::identity(m.field(), m.dim());
  FMatrix stacked(m.field(), 0, m.dim());
  for (auto s : q.generators) stacked = ffla::vstack(stacked, minus_identity(m.act(s)));
  return ffla::nullspace(stacked);
}

FMatrix relative_trace_matrix(const ModuleRep& m, const grp::Subgroup& q, const grp::Subgroup& r) {
  FMatrix t(m.field(), m.dim(), m.dim());
  for (auto x : grp::left_coset_reps(m.G(), q, r)) t = t + m.act(x);
  return t;
}

BrauerQuotient brauer_quotient(const ModuleRep& m, const grp::Subgroup& q, std::span<const std::size_t> acting) {
  const unsigned p = m.field()->p();
  if (!grp::is_p_power(q.order(), p)) throw ModuleError("brauer_quotient: Q is not a p-group");
  const auto& g = m.G();
  BrauerQuotient out;
  out.fixed = fixed_points(m, q);
  ffla::EchelonSpace tr(m.field(), m.dim());
  if (q.order() > 1) {
    for (const auto& r : grp::maximal_subgroups(g, q)) {
      const FMatrix fr = fixed_points(m, r);
      if (fr.rows() == 0) continue;
      const FMatrix t = relative_trace_matrix(m, q, r);
      const FMatrix img = fr * t.transpose();  // row i = (T v_i)^T
      for (std::size_t i = 0; i < img.rows(); ++i) tr.add(img.row_span(i));
    }
  }
  out.traces = tr.matrix();
  ffla::EchelonSpace all = tr;
  FMatrix comp(m.field(), 0, m.dim());
  for (std::size_t i = 0; i < out.fixed.rows(); ++i)
    if (all.add(out.fixed.row_span(i))) comp.append_row(out.fixed.row_span(i));
  if (all.dim() != out.fixed.rows()) throw ModuleError("brauer_quotient: traces escape the fixed space");
  out.complement = comp;
  out.dim = comp.rows();

  if (!acting.empty() && out.dim > 0) {
    // Coordinates with respect to [traces; complement].
    const FMatrix basis = ffla::vstack(out.traces, comp);
    const FMatrix bt = basis.transpose();
    const std::size_t k = out.traces.rows();
    for (auto y : acting) {
      const FMatrix ry = m.act(y);
      FMatrix a(m.field(), out.dim, out.dim);
      for (std::size_t j = 0; j < out.dim; ++j) {
        const auto w = ffla::mul_vec(ry, comp.row_span(j));
        const auto x = ffla::solve(bt, w);
        if (!x) throw ModuleError("brauer_quotient: acting element does not normalize Q");
        for (std::size_t i = 0; i < out.dim; ++i) a(i, j) = (*x)[k + i];
      }
      out.actions.push_back(std::move(a));
    }
  }
  return out;
}

std::vector<std::size_t> jordan_profile(const ModuleRep& m, std::size_t u) {
  const FMatrix a = minus_identity(m.act(u));
  std::vector<std::size_t> ranks{m.dim()};
  FMatrix power = a;
  while (ranks.back() > 0) {
    const std::size_t r = ffla::rank(power);
    if (r == ranks.back()) throw ModuleError("jordan_profile: rho(u) - 1 is not nilpotent");
    ranks.push_back(r);
    if (r) power = power * a;
  }
  ranks.push_back(0);
  std::vector<std::size_t> counts(ranks.size() - 1, 0);
  for (std::size_t j = 1; j + 1 < ranks.size(); ++j) counts[j] = ranks[j - 1] - 2 * ranks[j] + ranks[j + 1];
  return counts;
}

}  // namespace etk::modrep
