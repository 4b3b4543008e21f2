#include <random>

#include "doctest.h"
#include "etk/ffla/bitmatrix.hpp"
#include "etk/ffla/kernels.hpp"
#include "etk/ffla/linalg.hpp"

using namespace etk::ffla;

namespace {

FMatrix random_matrix(const Field& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  FMatrix m(F, r, c);
  std::uniform_int_distribution<unsigned> d(0, F->q() - 1);
  for (auto& x : m.data()) x = static_cast<Elem>(d(rng));
  return m;
}

// Low-rank matrix: product of r x k and k x c random factors.
FMatrix random_low_rank(const Field& F, std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng) {
  return random_matrix(F, r, k, rng) * random_matrix(F, k, c, rng);
}

}  // namespace

TEST_CASE("field tables satisfy the field axioms exhaustively") {
  for (auto [p, e] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 6u}, {3u, 2u}, {5u, 1u}}) {
    auto F = FieldTable::make(p, e);
    const unsigned q = F->q();
    CAPTURE(F->name());
    CHECK(F->order(F->primitive()) == q - 1);
    for (unsigned a = 0; a < q; ++a) {
      CHECK(F->add(a, 0) == a);
      CHECK(F->mul(a, 1) == a);
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a) {
        CHECK(F->mul(a, F->inv(a)) == 1);
        CHECK(F->exp(F->log(a)) == a);
      }
      for (unsigned b = 0; b < q; ++b) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        if (q > 16) continue;
        for (unsigned c = 0; c < q; ++c) {
          CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
          CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("GF(64) distributivity and associativity on all triples") {
  auto F = FieldTable::make(2, 6);
  std::size_t bad = 0;
  for (unsigned a = 0; a < 64; ++a)
    for (unsigned b = 0; b < 64; ++b)
      for (unsigned c = 0; c < 64; ++c) {
        bad += F->mul(F->mul(a, b), c) != F->mul(a, F->mul(b, c));
        bad += F->mul(a, F->add(b, c)) != F->add(F->mul(a, b), F->mul(a, c));
      }
  CHECK(bad == 0);
}

TEST_CASE("roots of unity") {
  CHECK(FieldTable::make(2, 1)->primitive() == 1);
  auto F4 = FieldTable::make(2, 2);
  CHECK(F4->order(F4->root_of_unity(3)) == 3);
  auto F64 = FieldTable::make(2, 6);
  CHECK(F64->order(F64->root_of_unity(9)) == 9);
  CHECK_THROWS_AS(F4->root_of_unity(9), FieldError);
  CHECK_THROWS_AS(FieldTable::make(4, 1), FieldError);
  CHECK_THROWS_AS(FieldTable::make(2, 17), FieldError);
  CHECK(multiplicative_order(2, 9) == 6);
  CHECK(multiplicative_order(2, 3) == 2);
}

TEST_CASE("field embedding is a ring homomorphism") {
  auto F4 = FieldTable::make(2, 2), F64 = FieldTable::make(2, 6);
  FieldEmbedding emb(F4, F64);
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      CHECK(emb(F4->mul(a, b)) == F64->mul(emb(a), emb(b)));
      CHECK(emb(F4->add(a, b)) == F64->add(emb(a), emb(b)));
    }
}

TEST_CASE("gauss basics") {
  auto F = FieldTable::make(2, 2);
  auto g = gauss(FMatrix::identity(F, 5));
  CHECK(g.rank == 5);
  CHECK(g.kernel.rows() == 0);
  auto z = gauss(FMatrix(F, 3, 4));
  CHECK(z.rank == 0);
  CHECK(z.kernel.rows() == 4);
}

TEST_CASE("rank of transpose equals rank on random GF(4) matrices") {
  auto F = FieldTable::make(2, 2);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    auto m = random_low_rank(F, 20, 20, 1 + t % 20, rng);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("kernel is annihilated and gauss is idempotent") {
  std::mt19937_64 rng(11);
  for (auto [p, e] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {5u, 2u}}) {
    auto F = FieldTable::make(p, e);
    for (int t = 0; t < 10; ++t) {
      auto m = random_low_rank(F, 12, 15, 1 + t, rng);
      auto g = gauss(m);
      CHECK(g.rank + g.kernel.rows() == m.cols());
      if (g.kernel.rows()) CHECK((m * g.kernel.transpose()).is_zero());
      CHECK(gauss(g.rref).rref == g.rref);
    }
  }
}

TEST_CASE("kron") {
  auto F = FieldTable::make(3, 1);
  CHECK(kron(FMatrix::identity(F, 2), FMatrix::identity(F, 3)) == FMatrix::identity(F, 6));
  std::mt19937_64 rng(3);
  auto b = random_matrix(F, 3, 2, rng);
  CHECK(kron(FMatrix::identity(F, 1), b) == b);
  auto F4 = FieldTable::make(2, 2);
  for (int t = 0; t < 30; ++t) {
    auto a = random_low_rank(F4, 4, 4, 1 + t % 4, rng);
    auto c = random_low_rank(F4, 4, 4, 1 + (t / 4) % 4, rng);
    CHECK(rank(kron(a, c)) == rank(a) * rank(c));
    auto d = random_matrix(F4, 2, 3, rng);
    CHECK(kron(a, kron(c, d)) == kron(kron(a, c), d));
  }
}

TEST_CASE("inverse and solve") {
  auto F = FieldTable::make(2, 3);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto m = random_matrix(F, 8, 8, rng);
    auto inv = inverse(m);
    if (!inv) continue;
    CHECK((m * *inv).is_identity());
    std::vector<Elem> b(8);
    for (auto& x : b) x = static_cast<Elem>(rng() % 8);
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(mul_vec(m, *x) == b);
  }
}

TEST_CASE("intersection of row spaces") {
  auto F = FieldTable::make(5, 1);
  std::mt19937_64 rng(13);
  auto common = random_matrix(F, 2, 7, rng);
  auto u = vstack(common, random_matrix(F, 2, 7, rng));
  auto w = vstack(common, random_matrix(F, 2, 7, rng));
  auto i = intersect(u, w);
  CHECK(i.rows() == 2);
  CHECK(rank(vstack(i, common)) == 2);
}

TEST_CASE("bit-packed GF(2) multiply matches the generic path") {
  auto F = FieldTable::make(2, 1);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 5; ++t) {
    auto a = random_matrix(F, 64, 64, rng), b = random_matrix(F, 64, 64, rng);
    auto packed = (BitMatrix(a) * BitMatrix(b)).to_fmatrix(F);
    CHECK(packed == kernels::multiply_reference(a, b));
    CHECK(BitMatrix(a).rank() == rank(a));
  }
  auto a = random_matrix(F, 70, 130, rng), b = random_matrix(F, 130, 65, rng);
  CHECK((BitMatrix(a) * BitMatrix(b)).to_fmatrix(F) == kernels::multiply_reference(a, b));
}

TEST_CASE("parallel kernels agree with the serial reference") {
  std::mt19937_64 rng(19);
  for (auto [p, e] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 6u}, {3u, 1u}, {5u, 2u}}) {
    auto F = FieldTable::make(p, e);
    auto a = random_matrix(F, 100, 90, rng), b = random_matrix(F, 90, 110, rng);
    CHECK(kernels::multiply(a, b) == kernels::multiply_reference(a, b));
    auto m1 = random_low_rank(F, 100, 120, 60, rng);
    auto m2 = m1;
    CHECK(kernels::row_reduce(m1) == kernels::row_reduce_reference(m2));
    CHECK(m1 == m2);
  }
}

TEST_CASE("echelon space") {
  auto F = FieldTable::make(3, 1);
  EchelonSpace s(F, 4);
  CHECK(s.add(std::vector<Elem>{1, 2, 0, 0}));
  CHECK(s.add(std::vector<Elem>{0, 1, 1, 0}));
  CHECK_FALSE(s.add(std::vector<Elem>{1, 1, 2, 0}));
  CHECK(s.contains(std::vector<Elem>{2, 1, 0, 0}));
  CHECK(s.dim() == 2);
}
