#include "etk/cli/run.hpp"

#include <ostream>
#include <sstream>

#include "etk/cli/catalog.hpp"
#include "etk/grp/io.hpp"
#include "json.hpp"

namespace etk::cli {

using json = nlohmann::ordered_json;

namespace {

json tensor_json(const core::KReport& r) {
  const auto& t = *r.tensor;
  json j{{"n", t.n},
         {"lambda", *r.tensor_lambda},
         {"dim", t.dim},
         {"brauer_vector", t.brauer_vector},
         {"brauer_all_ones", t.brauer_all_ones},
         {"xn_class", t.n_index ? json(*t.n_index) : json(nullptr)},
         {"one_dim_plus_projective", t.x_index.has_value()}};
  if (t.x_index) {
    j["x_class"] = *t.x_index;
    j["x_class_order"] = t.order;
  } else {
    j["x_class"] = nullptr;
  }
  return j;
}

}  // namespace

std::string report_json(const core::KReport& r, const core::TheoremCheck* check, const std::string* check_label) {
  json j;
  j["schema"] = 1;
  j["group"] = r.group;
  j["prime"] = r.prime;
  j["field"] = {{"p", r.prime}, {"e", r.field_degree}};
  j["sylow"] = {{"order", r.sylow_order}, {"type", r.sylow_type}};
  j["normalizer_order"] = r.normalizer_order;
  j["xn_structure"] = r.xn_structure;
  json lambdas = json::array();
  for (const auto& l : r.lambdas)
    lambdas.push_back({{"order", l.order},
                       {"dim_correspondent", l.dim},
                       {"brauer_vector", l.brauer_vector},
                       {"endotrivial", l.endotrivial_char},
                       {"simple", l.simple},
                       {"factors", l.factors}});
  j["lambdas"] = lambdas;
  j["k_invariant_factors"] = r.k_invariant_factors;
  j["x_image_invariant_factors"] = r.x_image_invariant_factors;
  j["tt_over_x"] = r.tt_over_x;
  j["caveats"] = r.caveats;
  j["seed"] = r.seed;
  if (r.tensor) j["tensor_power"] = tensor_json(r);
  if (check_label) {
    json c{{"expectation", *check_label}};
    if (check) {
      c["status"] = check->ok() ? "pass" : "fail";
      c["passed"] = check->passed;
      c["discrepancies"] = check->discrepancies;
    } else {
      c["status"] = "no_expectation";
    }
    j["theorem_check"] = c;
  }
  return j.dump(2) + "\n";
}

namespace {

template <class V>
std::string list(const V& v) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  s << "]";
  return s.str();
}

}  // namespace

std::string report_text(const core::KReport& r, const core::TheoremCheck* check, const std::string* check_label) {
  std::ostringstream s;
  s << "group " << r.group << " (order " << r.group_order << "), p = " << r.prime << ", field GF(" << r.prime << "^"
    << r.field_degree << ")\n";
  s << "Sylow " << r.sylow_type << ", |N_G(P)| = " << r.normalizer_order << ", X(N) " << list(r.xn_structure) << "\n";
  for (const auto& l : r.lambdas) {
    s << "  lambda " << l.index << " order " << l.order << ": induced " << l.induced_dim << ", End dim "
      << l.hecke_dim << ", summands " << list(l.summand_dims) << "; correspondent dim " << l.dim << ", Brauer "
      << list(l.brauer_vector) << ", " << (l.endotrivial_char ? "endo-trivial" : "not endo-trivial")
      << (l.simple ? ", simple" : "") << ", factors " << list(l.factors) << (l.in_x_image ? ", in X(G)" : "")
      << "\n";
  }
  s << "K " << list(r.k_invariant_factors) << ", X(G) image " << list(r.x_image_invariant_factors) << ", K/X "
    << list(r.tt_over_x) << "\n";
  if (r.properties.ran)
    s << "properties " << (r.properties.ok() ? "ok" : "FAILED") << " (" << r.properties.summands_tested
      << " summands tested, " << r.properties.summands_skipped << " over budget)\n";
  for (const auto& f : r.properties.failures) s << "  " << f << "\n";
  if (r.tensor) {
    const auto& t = *r.tensor;
    s << "tensor power " << t.n << " of lambda " << *r.tensor_lambda << ": dim " << t.dim << ", Brauer "
      << list(t.brauer_vector) << ", ";
    if (!t.brauer_all_ones)
      s << "not endo-trivial plus projective\n";
    else if (t.x_index)
      s << "class X(G)[" << *t.x_index << "] of order " << t.order << "\n";
    else
      s << "class X(N)[" << *t.n_index << "] outside the X(G) image\n";
  }
  if (!r.caveats.empty()) s << "caveats " << list(r.caveats) << "\n";
  if (check_label) {
    s << "theorem check (" << *check_label << "): ";
    if (!check) {
      s << "no expectation\n";
    } else {
      s << (check->ok() ? "pass" : "FAIL") << "\n";
      for (const auto& d : check->discrepancies) s << "  discrepancy: " << d << "\n";
    }
  }
  s << "seed " << r.seed << "\n";
  return s.str();
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    grp::GroupPtr g;
    std::string name = cfg.group;
    const CatalogEntry* entry = nullptr;
    if (cfg.group.rfind("builtin:", 0) == 0) {
      name = cfg.group.substr(8);
      entry = find_entry(name);
      if (!entry) throw grp::GroupError("unknown builtin group " + name);
      g = build_validated(*entry);
    } else {
      g = std::make_shared<const grp::GroupTable>(grp::GroupTable::enumerate(grp::read_group_file(cfg.group)));
    }
    if (cfg.prime != 2) throw core::EtkError("only p = 2 is supported");
    core::AnalyzeOptions opt;
    opt.prime = cfg.prime;
    opt.field_degree = cfg.field_degree;
    opt.seed = cfg.seed;
    opt.tensor_power = cfg.tensor_power;
    opt.tensor_budget = cfg.tensor_budget;
    const core::Expectation* exp = entry && entry->expectation ? &*entry->expectation : nullptr;
    if (cfg.check_theorem && exp && exp->cube_nontrivial && opt.tensor_power == 0) opt.tensor_power = 3;
    const core::KReport r = core::compute_K(g, name, opt);

    std::optional<core::TheoremCheck> check;
    std::string label = exp ? exp->label : "none";
    if (cfg.check_theorem && exp) check = core::theorem_check(r, *exp);
    const core::TheoremCheck* cp = check ? &*check : nullptr;
    const std::string* lp = cfg.check_theorem ? &label : nullptr;
    out << (cfg.format == Format::json ? report_json(r, cp, lp) : report_text(r, cp, lp));
    if (!r.properties.ok()) {
      for (const auto& f : r.properties.failures) err << "property failure: " << f << "\n";
      return kExitError;
    }
    if (check && !check->ok()) return kExitDiscrepancy;
    return kExitOk;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitError;
  }
}

}  // namespace etk::cli
