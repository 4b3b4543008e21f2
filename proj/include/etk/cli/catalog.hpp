#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "etk/core/report.hpp"
#include "etk/grp/element.hpp"

namespace etk::cli {

/// A named group with its construction and the checks it must pass before
/// any analysis runs.
struct CatalogEntry {
  std::string name;
  std::string family;  // e.g. "alternating", "psl2", "cover"
  std::function<std::vector<grp::GElement>()> build;
  std::size_t order = 0;
  std::optional<std::size_t> center_order;
  std::optional<std::size_t> o2prime_order;
  std::optional<bool> perfect;
  std::optional<core::Expectation> expectation;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& name);

/// Generators of PSL(2,q) (psl = true) or PGL(2,q) acting on the q+1 points
/// of the projective line, for a prime power q = p^e.
std::vector<grp::GElement> projective_line_group(unsigned p, unsigned e, bool psl);

/// Enumerates the group and checks the entry's order, center, O_2' and
/// perfectness predicates; throws grp::GroupError on any mismatch.
grp::GroupPtr build_validated(const CatalogEntry& e);

/// Text of an embedded group data file ("3A6", "3A7").
const std::string& embedded_group_text(const std::string& name);

}  // namespace etk::cli
