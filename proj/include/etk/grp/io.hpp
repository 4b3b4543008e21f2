#pragma once

#include <string>
#include <vector>

#include "etk/grp/element.hpp"

namespace etk::grp {

/// Generators read from the group text format:
///
///   perm <degree>          followed by one cycle-notation generator per line, or
///   mat <p> <e> <dim>      followed by one row-major matrix per line, where 0 is
///                          the zero element and k+1 stands for g^k, g the fixed
///                          primitive element of GF(p^e).
///
/// Blank lines and lines starting with '#' are ignored.
std::vector<GElement> parse_group_text(const std::string& text);
std::vector<GElement> read_group_file(const std::string& path);

/// Inverse of parse_group_text for matrix generators.
std::string format_matrix_generator(const ffla::FMatrix& m);

}  // namespace etk::grp
