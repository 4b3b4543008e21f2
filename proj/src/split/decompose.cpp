#include "etk/split/decompose.hpp"

#include "etk/ffla/linalg.hpp"

namespace etk::split {

Decomposition split_summands(const HeckeEnd& h, std::uint64_t seed) {
  const Algebra& a = h.algebra();
  const auto idem = primitive_idempotents(a, seed);
  Decomposition out;
  std::size_t total = 0;
  for (std::size_t i = 0; i < idem.idempotents.size(); ++i) {
    const Vec& e = idem.idempotents[i];
    const FMatrix image = ffla::column_basis(h.realize(e));
    Summand s{modrep::submodule(h.induced(), image), image, e, idem.corner_dims[i], idem.corner_radical_dims[i], 0};
    total += s.module.dim();
    s.iso_class = out.iso_class_count;
    for (std::size_t j = 0; j < out.summands.size(); ++j) {
      const auto& t = out.summands[j];
      if (t.module.dim() == s.module.dim() && idempotents_equivalent(a, t.idempotent, e)) {
        s.iso_class = t.iso_class;
        break;
      }
    }
    if (s.iso_class == out.iso_class_count) ++out.iso_class_count;
    out.summands.push_back(std::move(s));
  }
  if (total != h.induced().dim()) throw SplitError("split_summands: summand dimensions do not add up");
  return out;
}

}  // namespace etk::split
