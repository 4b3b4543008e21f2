#include "etk/grp/io.hpp"

#include <fstream>
#include <sstream>

namespace etk::grp {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<GElement> parse_group_text(const std::string& text) {
  std::istringstream in(text);
  std::string line, kind;
  std::size_t degree = 0;
  ffla::Field field;
  std::vector<GElement> gens;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (kind.empty()) {
      std::istringstream hdr(line);
      hdr >> kind;
      if (kind == "perm") {
        if (!(hdr >> degree) || degree == 0) throw GroupError(where + "bad perm header");
      } else if (kind == "mat") {
        unsigned p = 0, e = 0;
        if (!(hdr >> p >> e >> degree) || degree == 0) throw GroupError(where + "bad mat header");
        field = ffla::FieldTable::make(p, e);
      } else {
        throw GroupError(where + "header must be 'perm <degree>' or 'mat <p> <e> <dim>'");
      }
      continue;
    }
    if (kind == "perm") {
      gens.push_back(parse_cycles(line, degree));
      continue;
    }
    std::istringstream row(line);
    std::vector<ffla::Elem> entries;
    long long v;
    while (row >> v) {
      if (v < 0 || v > static_cast<long long>(field->q() - 1)) throw GroupError(where + "matrix entry out of range");
      entries.push_back(v == 0 ? ffla::Elem{0} : field->exp(static_cast<std::uint64_t>(v - 1)));
    }
    if (!row.eof()) throw GroupError(where + "non-numeric matrix entry");
    if (entries.size() != degree * degree)
      throw GroupError(where + "expected " + std::to_string(degree * degree) + " entries");
    gens.push_back(GElement::matrix(ffla::FMatrix(field, degree, degree, std::move(entries))));
  }
  if (kind.empty()) throw GroupError("group text has no header");
  if (gens.empty()) throw GroupError("group text has no generators");
  return gens;
}

std::vector<GElement> read_group_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw GroupError("cannot open group file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_group_text(buf.str());
}

std::string format_matrix_generator(const ffla::FMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.data().size(); ++i) {
    const auto x = m.data()[i];
    out << (i ? " " : "") << (x == 0 ? 0u : m.F().log(x) + 1);
  }
  return out.str();
}

}  // namespace etk::grp
