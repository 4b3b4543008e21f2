#include "etk/grp/element.hpp"

#include <cctype>
#include <cstring>
#include <sstream>

#include "etk/ffla/linalg.hpp"

namespace etk::grp {

GElement GElement::permutation(std::vector<std::uint32_t> images) {
  std::vector<bool> hit(images.size(), false);
  for (auto x : images) {
    if (x >= images.size() || hit[x]) throw GroupError("permutation is not a bijection");
    hit[x] = true;
  }
  GElement g;
  g.kind_ = Kind::permutation;
  g.images_ = std::move(images);
  g.make_key();
  return g;
}

GElement GElement::matrix(ffla::FMatrix m) {
  if (!m.square()) throw GroupError("matrix element must be square");
  if (ffla::rank(m) != m.rows()) throw GroupError("matrix element is not invertible");
  GElement g;
  g.kind_ = Kind::matrix;
  g.mat_ = std::move(m);
  g.make_key();
  return g;
}

void GElement::make_key() {
  if (kind_ == Kind::permutation) {
    key_.assign(reinterpret_cast<const char*>(images_.data()), images_.size() * sizeof(std::uint32_t));
  } else {
    const auto& d = mat_.data();
    key_.assign(reinterpret_cast<const char*>(d.data()), d.size() * sizeof(ffla::Elem));
  }
}

std::size_t GElement::degree() const { return kind_ == Kind::permutation ? images_.size() : mat_.rows(); }

GElement GElement::operator*(const GElement& other) const {
  if (kind_ != other.kind_ || degree() != other.degree()) throw GroupError("mixed element kinds");
  GElement r;
  r.kind_ = kind_;
  if (kind_ == Kind::permutation) {
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = other.images_[images_[i]];
  } else {
    r.mat_ = mat_ * other.mat_;
  }
  r.make_key();
  return r;
}

GElement GElement::inverse() const {
  GElement r;
  r.kind_ = kind_;
  if (kind_ == Kind::permutation) {
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint32_t>(i);
  } else {
    r.mat_ = ffla::invert(mat_);
  }
  r.make_key();
  return r;
}

GElement GElement::identity_like() const {
  if (kind_ == Kind::permutation) {
    std::vector<std::uint32_t> id(images_.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint32_t>(i);
    return permutation(std::move(id));
  }
  return matrix(ffla::FMatrix::identity(mat_.field(), mat_.rows()));
}

bool GElement::is_identity() const {
  if (kind_ == Kind::permutation) {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }
  return mat_.is_identity();
}

GElement parse_cycles(const std::string& text, std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw GroupError("cycle notation: expected '(' in \"" + text + "\"");
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
      if (pos >= text.size()) throw GroupError("cycle notation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw GroupError("cycle notation: expected a point in \"" + text + "\"");
      const unsigned long pt = std::stoul(text.substr(pos, end - pos));
      if (pt < 1 || pt > degree) throw GroupError("cycle notation: point out of range");
      if (used[pt - 1]) throw GroupError("cycle notation: point repeated");
      used[pt - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(pt - 1));
      pos = end;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return GElement::permutation(std::move(img));
}

std::string to_cycles(const GElement& g) {
  if (!g.is_permutation()) throw GroupError("to_cycles: not a permutation");
  const auto& img = g.images();
  std::vector<bool> seen(img.size(), false);
  std::ostringstream out;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (seen[i] || img[i] == i) continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out << (first ? "" : ",") << j + 1;
      first = false;
      j = img[j];
    }
    out << ')';
  }
  const auto s = out.str();
  return s.empty() ? "()" : s;
}

}  // namespace etk::grp
