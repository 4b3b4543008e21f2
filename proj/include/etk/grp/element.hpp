#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etk/ffla/matrix.hpp"

namespace etk::grp {

class GroupError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A group element: either a permutation of {0..n-1} or an invertible square
/// matrix over a finite field.
///
/// Products compose left to right: for permutations x^(gh) = (x^g)^h, i.e.
/// images()[i] of g*h is h.images()[g.images()[i]]; for matrices g*h is the
/// ordinary matrix product.
class GElement {
public:
  enum class Kind { permutation, matrix };

  static GElement permutation(std::vector<std::uint32_t> images);
  static GElement matrix(ffla::FMatrix m);

  Kind kind() const { return kind_; }
  bool is_permutation() const { return kind_ == Kind::permutation; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  const ffla::FMatrix& mat() const { return mat_; }

  /// Degree of the permutation or dimension of the matrix.
  std::size_t degree() const;

  GElement operator*(const GElement& other) const;
  GElement inverse() const;
  GElement identity_like() const;
  bool is_identity() const;

  /// Canonical byte encoding; equal elements have equal keys.
  const std::string& key() const { return key_; }

  bool operator==(const GElement& other) const { return key_ == other.key_; }

private:
  void make_key();

  Kind kind_ = Kind::permutation;
  std::vector<std::uint32_t> images_;
  ffla::FMatrix mat_;
  std::string key_;
};

/// Parses cycle notation with 1-based points, e.g. "(1,2,3)(4,5)" or "(1 2 3)";
/// "()" is the identity.
GElement parse_cycles(const std::string& text, std::size_t degree);
std::string to_cycles(const GElement& g);

}  // namespace etk::grp
