#include "etk/ffla/field.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace etk::ffla {

namespace {

// Fixed primitive polynomials, coefficients low to high (monic).
// Pairs (p, e) not listed fall back to the lexicographically smallest primitive
// polynomial, which is equally deterministic.
const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>& poly_table() {
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 12}, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
      {{2, 13}, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 14}, {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 15}, {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 16}, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{11, 1}, {9, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 1}, {11, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

// Powers of x modulo poly, as vector-form integers; empty if poly is not primitive.
std::vector<Elem> power_table(unsigned p, unsigned e, const std::vector<unsigned>& poly) {
  std::uint32_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  std::vector<unsigned> v(e, 0);
  v[0] = 1;
  std::vector<Elem> out;
  out.reserve(q - 1);
  std::vector<bool> seen(q, false);
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    std::uint32_t x = 0;
    for (unsigned i = e; i-- > 0;) x = x * p + v[i];
    if (x == 0 || seen[x]) return {};
    seen[x] = true;
    out.push_back(static_cast<Elem>(x));
    // multiply by x and reduce with x^e = -(poly_0 + ... + poly_{e-1} x^{e-1})
    const unsigned top = v[e - 1];
    for (unsigned i = e - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    for (unsigned i = 0; i < e; ++i) v[i] = (v[i] + (p - (top * poly[i]) % p)) % p;
  }
  std::uint32_t x = 0;
  for (unsigned i = e; i-- > 0;) x = x * p + v[i];
  if (x != 1) return {};
  return out;
}

std::vector<unsigned> search_primitive(unsigned p, unsigned e) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::uint64_t code = 1; code < count; ++code) {
    std::vector<unsigned> poly(e + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < e; ++i) {
      poly[i] = static_cast<unsigned>(c % p);
      c /= p;
    }
    poly[e] = 1;
    if (poly[0] == 0) continue;
    if (!power_table(p, e, poly).empty()) return poly;
  }
  throw FieldError("no primitive polynomial found");
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned multiplicative_order(unsigned p, unsigned m) {
  if (m <= 1) return 1;
  if (std::gcd(p, m) != 1) throw FieldError("multiplicative_order: p and m not coprime");
  unsigned k = 1;
  unsigned long long x = p % m;
  while (x != 1) {
    x = (x * p) % m;
    ++k;
  }
  return k;
}

std::shared_ptr<const FieldTable> FieldTable::make(unsigned p, unsigned e) {
  if (!is_prime(p)) throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw FieldError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > (1u << 16)) throw FieldError("field size exceeds 2^16");
  }
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const FieldTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, e);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<unsigned> poly;
  if (auto it = poly_table().find(key); it != poly_table().end())
    poly = it->second;
  else
    poly = search_primitive(p, e);
  auto table = std::make_shared<const FieldTable>(p, e, std::move(poly));
  cache.emplace(key, table);
  return table;
}

FieldTable::FieldTable(unsigned p, unsigned e, std::vector<unsigned> poly)
    : p_(p), e_(e), poly_(std::move(poly)) {
  q_ = 1;
  for (unsigned i = 0; i < e; ++i) q_ *= p;
  if (poly_.size() != e + 1 || poly_[e] != 1) throw FieldError("malformed defining polynomial");
  auto powers = power_table(p, e, poly_);
  if (powers.empty())
    throw FieldError("defining polynomial for GF(" + std::to_string(q_) + ") is not primitive");
  exp_.resize(2 * (q_ - 1));
  log_.assign(q_, 0);
  for (std::uint32_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = powers[k];
    exp_[k + q_ - 1] = powers[k];
    log_[powers[k]] = k;
  }
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t r = 0, mult = 1, x = a;
    for (unsigned i = 0; i < e_; ++i) {
      r += ((p_ - x % p_) % p_) * mult;
      x /= p_;
      mult *= p_;
    }
    neg_[a] = static_cast<Elem>(r);
  }
  if (q_ <= 256) {
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b)
        mul_[a * q_ + b] = (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]];
    if (p_ != 2) {
      add_.resize(static_cast<std::size_t>(q_) * q_);
      for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b)
          add_[a * q_ + b] = add_digits(static_cast<Elem>(a), static_cast<Elem>(b));
    }
  }
}

Elem FieldTable::add_digits(Elem a, Elem b) const {
  if (e_ == 1) return static_cast<Elem>((a + b) % p_);
  std::uint32_t r = 0, mult = 1, x = a, y = b;
  for (unsigned i = 0; i < e_; ++i) {
    r += ((x % p_ + y % p_) % p_) * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return static_cast<Elem>(r);
}

Elem FieldTable::inv(Elem a) const {
  if (a == 0) throw FieldError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FieldTable::pow(Elem a, long long k) const {
  if (a == 0) {
    if (k < 0) throw FieldError("negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const long long n = q_ - 1;
  long long r = (static_cast<long long>(log_[a]) * (k % n)) % n;
  if (r < 0) r += n;
  return exp_[r];
}

std::uint32_t FieldTable::log(Elem a) const {
  if (a == 0 || a >= q_) throw FieldError("log of zero or invalid element");
  return log_[a];
}

std::uint32_t FieldTable::order(Elem a) const {
  const std::uint32_t n = q_ - 1;
  return n / std::gcd(n, log(a));
}

Elem FieldTable::root_of_unity(std::uint32_t m) const {
  if (m == 0 || (q_ - 1) % m != 0)
    throw FieldError("no root of unity of order " + std::to_string(m) + " in " + name());
  return exp_[(q_ - 1) / m % (q_ - 1)];
}

Elem FieldTable::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

unsigned FieldTable::digit(Elem a, unsigned i) const {
  std::uint32_t x = a;
  for (unsigned k = 0; k < i; ++k) x /= p_;
  return x % p_;
}

Elem FieldTable::from_digits(const std::vector<unsigned>& digits) const {
  std::uint32_t r = 0;
  for (unsigned i = static_cast<unsigned>(digits.size()); i-- > 0;) r = r * p_ + digits[i] % p_;
  return static_cast<Elem>(r);
}

std::string FieldTable::name() const { return "GF(" + std::to_string(q_) + ")"; }

FieldEmbedding::FieldEmbedding(Field from, Field to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->p() != to_->p() || to_->e() % from_->e() != 0)
    throw FieldError("no embedding " + from_->name() + " -> " + to_->name());
  const auto& poly = from_->polynomial();
  const std::uint32_t step = (to_->q() - 1) / (from_->q() - 1);
  Elem root = 0;
  bool found = false;
  for (std::uint32_t k = 1; k < from_->q() && !found; ++k) {
    if (std::gcd(k, from_->q() - 1) != 1) continue;
    Elem b = to_->exp(static_cast<std::uint64_t>(k) * step);
    Elem acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = to_->add(to_->mul(acc, b), to_->from_int(poly[i]));
    if (acc == 0) {
      root = b;
      found = true;
    }
  }
  if (!found) throw FieldError("defining polynomial has no root in the target field");
  map_.assign(from_->q(), 0);
  for (std::uint32_t k = 0; k < from_->q() - 1; ++k) map_[from_->exp(k)] = to_->pow(root, k);
}

}  // namespace etk::ffla
