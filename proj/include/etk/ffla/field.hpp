#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace etk::ffla {

/// A field element in "vector" form: the integer sum c_i p^i, where c_i are the
/// coefficients of the element in the polynomial basis 1, g, g^2, ... over GF(p).
/// Zero is 0 and one is 1 in every field.
using Elem = std::uint16_t;

class FieldError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic in GF(p^e), q = p^e <= 2^16, via discrete log tables over a
/// fixed primitive element g (a root of the compiled-in primitive polynomial).
///
/// Instances are immutable and shared; use FieldTable::make, which caches one
/// table per (p, e).
class FieldTable {
public:
  static std::shared_ptr<const FieldTable> make(unsigned p, unsigned e);

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  std::uint32_t q() const { return q_; }

  /// Defining primitive polynomial, coefficients low to high, monic, degree e.
  const std::vector<unsigned>& polynomial() const { return poly_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return static_cast<Elem>(a ^ b);
    if (!add_.empty()) return add_[static_cast<std::size_t>(a) * q_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return p_ == 2 ? a : neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (!mul_.empty()) return mul_[static_cast<std::size_t>(a) * q_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long k) const;

  /// g^k for any integer k >= 0 (reduced mod q - 1).
  Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  /// Discrete log base g of a nonzero element.
  std::uint32_t log(Elem a) const;
  Elem primitive() const { return exp_[1 % (q_ - 1)]; }

  /// Multiplicative order of a nonzero element.
  std::uint32_t order(Elem a) const;

  /// g^((q-1)/m); throws FieldError unless m divides q - 1.
  Elem root_of_unity(std::uint32_t m) const;

  /// Image of an integer in the prime field.
  Elem from_int(long long n) const;

  /// Coefficient of g^i in the polynomial-basis expansion of a.
  unsigned digit(Elem a, unsigned i) const;
  /// Inverse of digit(): element with the given polynomial-basis coefficients.
  Elem from_digits(const std::vector<unsigned>& digits) const;

  /// Row of the multiplication table for c (x -> c*x), available when q <= 256.
  const Elem* mul_row(Elem c) const {
    return mul_.empty() ? nullptr : mul_.data() + static_cast<std::size_t>(c) * q_;
  }
  const Elem* add_row(Elem c) const {
    return add_.empty() ? nullptr : add_.data() + static_cast<std::size_t>(c) * q_;
  }

  std::string name() const;

  FieldTable(unsigned p, unsigned e, std::vector<unsigned> poly);

private:
  Elem add_digits(Elem a, Elem b) const;

  unsigned p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<unsigned> poly_;
  std::vector<Elem> exp_;           // length 2(q-1), so exp_[log a + log b] needs no reduction
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<Elem> neg_;
  std::vector<Elem> mul_;  // q*q, only when q <= 256
  std::vector<Elem> add_;  // q*q, only when p odd and q <= 256
};

using Field = std::shared_ptr<const FieldTable>;

inline bool same_field(const Field& a, const Field& b) {
  return a == b || (a && b && a->p() == b->p() && a->e() == b->e());
}

bool is_prime(unsigned n);

/// Multiplicative order of p modulo m (m coprime to p); 1 when m == 1.
unsigned multiplicative_order(unsigned p, unsigned m);

/// Field embedding GF(p^e) -> GF(p^E) for e | E, sending the primitive element of
/// the small field to a root of its defining polynomial in the large field.
class FieldEmbedding {
public:
  FieldEmbedding(Field from, Field to);
  Elem operator()(Elem a) const { return map_[a]; }
  const Field& from() const { return from_; }
  const Field& to() const { return to_; }

private:
  Field from_;
  Field to_;
  std::vector<Elem> map_;
};

}  // namespace etk::ffla
