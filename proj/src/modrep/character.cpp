#include "etk/modrep/character.hpp"

#include <numeric>

namespace etk::modrep {

std::shared_ptr<const XStructure> XStructure::make(GroupPtr g, unsigned p) {
  auto x = std::make_shared<XStructure>();
  x->ab = grp::abelianization_pprime(*g, p);
  x->group = std::move(g);
  x->p = p;
  return x;
}

LinearCharacter::LinearCharacter(XPtr x, std::vector<std::uint32_t> a) : x_(std::move(x)), a_(std::move(a)) {
  if (a_.size() != x_->ab.orders.size()) throw std::invalid_argument("LinearCharacter: wrong coordinate count");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] %= x_->ab.orders[i];
}

LinearCharacter LinearCharacter::trivial(XPtr x) {
  std::vector<std::uint32_t> a(x->ab.orders.size(), 0);
  return LinearCharacter(std::move(x), std::move(a));
}

std::uint32_t LinearCharacter::exponent_at(std::size_t g) const {
  const auto& ab = x_->ab;
  const std::uint64_t m = ab.exponent;
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) k += std::uint64_t{a_[i]} * (m / ab.orders[i]) * ab.coords[g][i];
  return static_cast<std::uint32_t>(k % m);
}

Elem LinearCharacter::value(std::size_t g, const ffla::FieldTable& f) const {
  const std::uint32_t k = exponent_at(g);
  if (k == 0) return 1;
  return f.pow(f.root_of_unity(x_->ab.exponent), k);
}

std::uint32_t LinearCharacter::order() const {
  std::uint32_t o = 1;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    const std::uint32_t d = x_->ab.orders[i];
    o = std::lcm(o, d / std::gcd(d, a_[i] == 0 ? d : a_[i]));
  }
  return o;
}

bool LinearCharacter::is_trivial() const {
  for (auto v : a_)
    if (v) return false;
  return true;
}

LinearCharacter LinearCharacter::operator*(const LinearCharacter& o) const {
  if (x_ != o.x_) throw std::invalid_argument("LinearCharacter: product across different groups");
  auto a = a_;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + o.a_[i]) % x_->ab.orders[i];
  return LinearCharacter(x_, std::move(a));
}

LinearCharacter LinearCharacter::inverse() const {
  auto a = a_;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (x_->ab.orders[i] - a[i]) % x_->ab.orders[i];
  return LinearCharacter(x_, std::move(a));
}

std::vector<LinearCharacter> all_characters(const XPtr& x) {
  const auto& orders = x->ab.orders;
  std::vector<LinearCharacter> out;
  std::vector<std::uint32_t> a(orders.size(), 0);
  while (true) {
    out.emplace_back(x, a);
    std::size_t i = orders.size();
    while (i > 0) {
      --i;
      if (++a[i] < orders[i]) break;
      a[i] = 0;
      if (i == 0) return out;
    }
    if (orders.empty()) return out;
  }
}

std::size_t character_index(const LinearCharacter& lambda) {
  const auto& orders = lambda.structure()->ab.orders;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + lambda.coords()[i];
  return idx;
}

}  // namespace etk::modrep
