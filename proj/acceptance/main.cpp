// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "etk/cli/catalog.hpp"
#include "etk/cli/run.hpp"
#include "etk/core/report.hpp"
#include "etk/split/meataxe.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace etk;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::vector<std::string> failed;
  void expect(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
};

std::map<std::string, core::KReport> reports;

const core::KReport& analyze(const std::string& name, unsigned tensor_power = 0) {
  auto it = reports.find(name);
  if (it != reports.end()) return it->second;
  const auto* e = cli::find_entry(name);
  if (!e) throw std::runtime_error("no builtin " + name);
  core::AnalyzeOptions opt;
  opt.tensor_power = tensor_power;
  return reports.emplace(name, core::compute_K(cli::build_validated(*e), name, opt)).first->second;
}

template <class T>
std::string str(const std::vector<T>& v) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << "]";
  return s.str();
}

std::vector<std::size_t> dims_of(const core::KReport& r, bool in_k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < r.lambdas.size(); ++i) {
    const bool k = std::find(r.k_elements.begin(), r.k_elements.end(), i) != r.k_elements.end();
    if (k == in_k) out.push_back(r.lambdas[i].dim);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_image(const core::KReport& r, std::size_t i) { return r.lambdas[i].in_x_image; }

bool theorem_ok(const std::string& name, Check& c) {
  const auto* e = cli::find_entry(name);
  const auto t = core::theorem_check(analyze(name), *e->expectation);
  for (const auto& d : t.discrepancies) c.failed.push_back(name + " " + d);
  return t.ok();
}

void criterion_3a6(Check& c) {
  const auto& r = analyze("3A6");
  c.expect(r.k_invariant_factors == std::vector<std::uint32_t>{3}, "K = " + str(r.k_invariant_factors));
  std::vector<const core::LambdaReport*> v;
  for (auto i : r.k_elements)
    if (!in_image(r, i)) v.push_back(&r.lambdas[i]);
  c.expect(v.size() == 2, "two classes outside X(G)");
  for (const auto* l : v) {
    c.expect(l->dim == 9, "dim " + std::to_string(l->dim));
    c.expect(l->simple, "not simple");
    c.expect(std::all_of(l->brauer_vector.begin(), l->brauer_vector.end(), [](auto d) { return d == 1; }),
             "Brauer witness " + str(l->brauer_vector));
  }
  if (v.size() == 2) c.expect(split::iso_test(modrep::dual(*v[0]->module), *v[1]->module, 5), "not mutually dual");
  c.expect(theorem_ok("3A6", c), "theorem check");
}

void criterion_3a7(Check& c) {
  const auto& r = analyze("3A7");
  c.expect(r.k_invariant_factors.empty(), "K = " + str(r.k_invariant_factors));
  c.expect(r.field_degree == 2, "field GF(2^" + std::to_string(r.field_degree) + ")");
  std::size_t bad = 0;
  for (std::size_t i = 0; i < r.lambdas.size(); ++i) {
    const auto& l = r.lambdas[i];
    if (l.order == 1) continue;
    ++bad;
    c.expect(l.dim == 15, "dim " + std::to_string(l.dim));
    c.expect(l.induced_dim == 315, "induced dim " + std::to_string(l.induced_dim));
    c.expect(!l.endotrivial_char, "character test passed");
    // Cyclic classes are ordered by order: involutions first.
    bool at_involution = false;
    for (std::size_t q = 0; q < r.sylow->cyclic.size(); ++q)
      if (r.sylow->cyclic[q].order() == 2 && l.brauer_vector[q] != 1) at_involution = true;
    c.expect(at_involution, "no failing involution in " + str(l.brauer_vector));
  }
  c.expect(bad == 2, "two nontrivial lambdas");
  c.expect(theorem_ok("3A7", c), "theorem check");
}

void criterion_c9(Check& c) {
  const auto& r = analyze("C9*3A6");
  c.expect(r.k_invariant_factors == std::vector<std::uint32_t>{9}, "K = " + str(r.k_invariant_factors));
  const std::vector<std::size_t> want{1, 1, 1, 9, 9, 9, 9, 9, 9};
  c.expect(dims_of(r, true) == want, "dims " + str(dims_of(r, true)));
  c.expect(r.xg->size() == 3, "|X(G)| = " + std::to_string(r.xg->size()));
  std::size_t cubes = 0;
  for (auto i : r.k_elements) {
    const auto& l = r.lambdas[i];
    if (l.dim != 9) continue;
    const auto t = core::tensor_power_class(*l.module, 3, *r.sylow, r.xg, r.xn);
    c.expect(t.brauer_all_ones && t.x_index && t.order == 3,
             "V^3 of lambda " + std::to_string(i) + " not a nontrivial class of X(G)");
    ++cubes;
  }
  c.expect(cubes == 6, std::to_string(cubes) + " cubes");
  c.expect(theorem_ok("C9*3A6", c), "theorem check");
}

void criterion_trivial(Check& c) {
  for (const char* n : {"A6", "A7", "PSL(2,7)", "PGL(2,9)"}) {
    const auto& r = analyze(n);
    c.expect(r.k_invariant_factors.empty() && r.x_image_invariant_factors.empty(),
             std::string(n) + " K = " + str(r.k_invariant_factors));
    c.expect(r.xg->size() == 1, std::string(n) + " X(G) nontrivial");
    theorem_ok(n, c);
  }
}

void criterion_klein(Check& c) {
  const auto& a4 = analyze("A4");
  c.expect(a4.k_invariant_factors == std::vector<std::uint32_t>{3} &&
               a4.x_image_invariant_factors == std::vector<std::uint32_t>{3},
           "A4 K = " + str(a4.k_invariant_factors) + " X = " + str(a4.x_image_invariant_factors));
  for (auto [n, dim] : {std::pair{"A5", 5u}, {"PSL(2,11)", 5u}, {"PSL(2,13)", 13u}}) {
    const auto& r = analyze(n);
    c.expect(r.k_invariant_factors == std::vector<std::uint32_t>{3}, std::string(n) + " K");
    const std::vector<std::size_t> want{1, dim, dim};
    c.expect(dims_of(r, true) == want, std::string(n) + " dims " + str(dims_of(r, true)));
    theorem_ok(n, c);
  }
  // Frozen factor labels for A5, and {1,6,6} for PSL(2,13).
  const std::vector<std::string> a5{"1a", "2a", "2b"}, l13{"1a", "6a", "6b"};
  for (auto i : analyze("A5").k_elements)
    if (i) c.expect(analyze("A5").lambdas[i].factors == a5, "A5 factors " + str(analyze("A5").lambdas[i].factors));
  for (auto i : analyze("PSL(2,13)").k_elements)
    if (i)
      c.expect(analyze("PSL(2,13)").lambdas[i].factors == l13,
               "PSL(2,13) factors " + str(analyze("PSL(2,13)").lambdas[i].factors));
}

std::string strip_seed(const std::string& s) {
  auto j = nlohmann::json::parse(s);
  j.erase("seed");
  return j.dump();
}

void criterion_properties(Check& c) {
  std::size_t tested = 0;
  for (const auto& [name, r] : reports) {
    const auto& p = r.properties;
    c.expect(p.ran, name + " properties not run");
    tested += p.summands_tested;
    for (const auto& f : p.failures) c.failed.push_back(name + ": " + f);
    c.expect(p.tests_agree && p.closed && p.duality && p.dim_congruence && p.ks_stable && p.hecke_mackey,
             name + " property flag");
  }
  c.expect(tested > 0, "no summands tested");
  // Seed independence of the whole report.
  for (const char* n : {"A5", "PSL(2,13)", "3A6"}) {
    cli::RunConfig a, b;
    a.group = b.group = std::string("builtin:") + n;
    b.seed = 20240917;
    std::ostringstream oa, ob, err;
    const int ca = cli::run(a, oa, err), cb = cli::run(b, ob, err);
    c.expect(ca == 0 && cb == 0 && strip_seed(oa.str()) == strip_seed(ob.str()), std::string(n) + " seed dependent");
  }
  std::printf("      %zu reports, %zu summands through both endo-triviality tests\n", reports.size(), tested);
}

void criterion_oracles(Check& c) {
  const auto a = oracles::radical_oracle(200, 2024);
  const auto b = oracles::brauer_fixed_point_oracle(100, 77);
  const auto j = oracles::jordan_brauer_oracle(100, 77);
  for (auto [name, o] : {std::pair{"radical", &a}, {"brauer", &b}, {"jordan", &j}}) {
    c.expect(o->ok(), std::string(name) + ": " + std::to_string(o->failures) + "/" + std::to_string(o->cases) + " " +
                          o->first_failure);
    std::printf("      %s oracle: %zu cases, %zu failures\n", name, o->cases, o->failures);
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> all{
      {"1 3.A6: K = Z/3, simple mutually dual 9-dim, all-ones witness", 60, criterion_3a6},
      {"2 3.A7: K = 1, 15-dim correspondents fail at an involution, induced dim 315 over GF(4)", 600, criterion_3a7},
      {"3 C9*3.A6: K = Z/9, dims 1^3 9^6, every V^3 nontrivial in X(G) = Z/3", 300, criterion_c9},
      {"4 A6, A7, PSL(2,7), PGL(2,9): K = X = 1", 0, criterion_trivial},
      {"5 Klein four: A4, A5, PSL(2,11), PSL(2,13)", 0, criterion_klein},
      {"6 property suite over all runs, seed independence", 0, criterion_properties},
      {"7 micro-oracles", 60, criterion_oracles},
  };
  int failures = 0;
  for (const auto& cr : all) {
    Check c;
    const auto t0 = Clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failed.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (cr.limit_s > 0 && s > cr.limit_s) c.failed.push_back("over time limit");
    const bool ok = c.failed.empty();
    failures += !ok;
    std::printf("%s  %s  (%.2f s)\n", ok ? "PASS" : "FAIL", cr.name, s);
    for (const auto& f : c.failed) std::printf("      %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
