#include "etk/split/meataxe.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "etk/ffla/linalg.hpp"

namespace etk::split {

FMatrix spin(const ModuleRep& m, const FMatrix& seeds) {
  ffla::EchelonSpace s(m.field(), m.dim());
  std::vector<Vec> queue;
  for (std::size_t i = 0; i < seeds.rows(); ++i)
    if (s.add(seeds.row_span(i))) queue.push_back(seeds.row_vector(i));
  for (std::size_t i = 0; i < queue.size() && s.dim() < m.dim(); ++i)
    for (const auto& g : m.generators()) {
      auto w = ffla::mul_vec(g, queue[i]);
      if (s.add(w)) queue.push_back(std::move(w));
    }
  return s.matrix();
}

FMatrix spin_dual(const ModuleRep& m, const FMatrix& seeds) {
  ffla::EchelonSpace s(m.field(), m.dim());
  std::vector<Vec> queue;
  for (std::size_t i = 0; i < seeds.rows(); ++i)
    if (s.add(seeds.row_span(i))) queue.push_back(seeds.row_vector(i));
  for (std::size_t i = 0; i < queue.size() && s.dim() < m.dim(); ++i)
    for (const auto& g : m.generators()) {
      auto w = ffla::vec_mul(queue[i], g);
      if (s.add(w)) queue.push_back(std::move(w));
    }
  return s.matrix();
}

namespace {

// Random element of the group algebra: a combination of short random words.
FMatrix random_algebra_element(const ModuleRep& m, std::mt19937_64& rng) {
  const auto& F = *m.field();
  const std::size_t k = m.generators().size();
  FMatrix acc(m.field(), m.dim(), m.dim());
  for (int term = 0; term < 3; ++term) {
    FMatrix w = m.gen(rng() % k);
    const int len = static_cast<int>(rng() % 3);
    for (int i = 0; i < len; ++i) w = w * m.gen(rng() % k);
    const Elem c = static_cast<Elem>(1 + rng() % (F.q() - 1));
    acc = acc + ffla::scale(w, c);
  }
  return acc;
}

}  // namespace

namespace {

FMatrix intertwiner_space(const ModuleRep& a, const ModuleRep& b) {
  // X with X rho_a(s) = rho_b(s) X; unknown X_{ik} at index i*d + k.
  const std::size_t d = a.dim();
  const auto& F = *a.field();
  FMatrix sys(a.field(), 0, d * d);
  for (std::size_t s = 0; s < a.generators().size(); ++s) {
    const auto& ra = a.gen(s);
    const auto& rb = b.gen(s);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vec row(d * d, 0);
        for (std::size_t k = 0; k < d; ++k) {
          row[i * d + k] = F.add(row[i * d + k], ra(k, j));
          row[k * d + j] = F.sub(row[k * d + j], rb(i, k));
        }
        sys.append_row(row);
      }
    // Reduce as we go to keep the system small.
    sys = ffla::row_basis(sys);
  }
  return ffla::nullspace(sys);
}

}  // namespace

NortonResult norton_test(const ModuleRep& m, std::uint64_t seed, int trial_cap) {
  const std::size_t d = m.dim();
  if (d <= 1) return {true, std::nullopt};
  const auto& F = *m.field();
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trial_cap; ++trial) {
    const FMatrix a = random_algebra_element(m, rng);
    for (std::uint32_t c = 0; c < F.q(); ++c) {
      FMatrix theta = a;
      for (std::size_t i = 0; i < d; ++i) theta(i, i) = F.sub(theta(i, i), static_cast<Elem>(c));
      const FMatrix ker = ffla::nullspace(theta);
      if (ker.rows() == 0) continue;
      // Any kernel vector that fails to generate gives a submodule.
      const FMatrix sub = spin(m, ker.row_range(0, 1));
      if (sub.rows() < d) return {false, sub};
      if (ker.rows() != 1) {
        for (std::size_t r = 1; r < ker.rows(); ++r) {
          const FMatrix s2 = spin(m, ker.row_range(r, 1));
          if (s2.rows() < d) return {false, s2};
        }
        continue;
      }
      const FMatrix lker = ffla::left_nullspace(theta);
      const FMatrix dsub = spin_dual(m, lker);
      if (dsub.rows() < d) return {false, ffla::nullspace(dsub)};
      return {true, std::nullopt};
    }
  }
  // Typically an irreducible module whose endomorphism field is GF(q^k).
  throw FieldTooSmall("norton_test: no element of nullity one found over " + F.name(),
                      static_cast<unsigned>(intertwiner_space(m, m).rows()));
}

bool is_irreducible(const ModuleRep& m, std::uint64_t seed) { return norton_test(m, seed).irreducible; }

std::vector<ModuleRep> chop(const ModuleRep& m, std::uint64_t seed) {
  std::vector<ModuleRep> out;
  std::vector<ModuleRep> todo{m};
  std::uint64_t s = seed;
  while (!todo.empty()) {
    ModuleRep x = std::move(todo.back());
    todo.pop_back();
    const auto r = norton_test(x, s++);
    if (r.irreducible) {
      out.push_back(std::move(x));
      continue;
    }
    todo.push_back(modrep::quotient_module(x, *r.submodule));
    todo.push_back(modrep::submodule(x, *r.submodule));
  }
  return out;
}


bool iso_test(const ModuleRep& a, const ModuleRep& b, std::uint64_t seed) {
  if (a.dim() != b.dim() || a.group() != b.group()) return false;
  if (!ffla::same_field(a.field(), b.field())) return false;
  const std::size_t d = a.dim();
  const FMatrix h = intertwiner_space(a, b);
  const std::size_t k = h.rows();
  if (k == 0) return false;
  const auto& F = *a.field();
  auto combo = [&](const Vec& coeff) {
    FMatrix x(a.field(), d, d);
    for (std::size_t r = 0; r < k; ++r)
      if (coeff[r])
        for (std::size_t t = 0; t < d * d; ++t) x.data()[t] = F.add(x.data()[t], F.mul(coeff[r], h(r, t)));
    return x;
  };
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 32; ++trial) {
    Vec c(k);
    for (auto& v : c) v = static_cast<Elem>(rng() % F.q());
    if (ffla::rank(combo(c)) == d) return true;
  }
  // Exhaustive scan of the intertwiner space when it is small.
  double size = 1;
  for (std::size_t r = 0; r < k; ++r) size *= F.q();
  if (size > 65536) return false;
  Vec c(k, 0);
  while (true) {
    std::size_t i = 0;
    while (i < k && ++c[i] == F.q()) c[i++] = 0;
    if (i == k) return false;
    if (ffla::rank(combo(c)) == d) return true;
  }
}

std::vector<std::string> factor_labels(const std::vector<ModuleRep>& simples, std::uint64_t seed) {
  // Iso classes first, then letters per dimension in fingerprint order.
  std::vector<std::size_t> cls(simples.size());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < simples.size(); ++i) {
    cls[i] = reps.size();
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (iso_test(simples[reps[r]], simples[i], seed)) {
        cls[i] = r;
        break;
      }
    if (cls[i] == reps.size()) reps.push_back(i);
  }
  // Fingerprint: traces at the first elements of the group (iso invariant).
  auto fingerprint = [](const ModuleRep& m) {
    std::vector<Elem> f;
    const std::size_t n = std::min<std::size_t>(64, m.G().order());
    for (std::size_t g = 0; g < n; ++g) f.push_back(m.act(g).trace());
    return f;
  };
  std::vector<std::pair<std::pair<std::size_t, std::vector<Elem>>, std::size_t>> keyed;
  for (std::size_t r = 0; r < reps.size(); ++r) keyed.push_back({{simples[reps[r]].dim(), fingerprint(simples[reps[r]])}, r});
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::string> name(reps.size());
  std::map<std::size_t, int> next_letter;
  for (const auto& [key, r] : keyed) {
    const int l = next_letter[key.first]++;
    name[r] = std::to_string(key.first) + static_cast<char>('a' + l);
  }
  std::vector<std::string> out;
  for (auto c : cls) out.push_back(name[c]);
  return out;
}

}  // namespace etk::split
