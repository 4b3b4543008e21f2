#include "etk/core/report.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "etk/split/meataxe.hpp"

namespace etk::core {

namespace {

using modrep::all_characters;
using modrep::character_index;

LinearCharacter power(const LinearCharacter& l, std::uint64_t d) {
  LinearCharacter r = LinearCharacter::trivial(l.structure());
  for (std::uint64_t i = 0; i < d; ++i) r = r * l;
  return r;
}

// Sorts labels like "1a", "6b", "12a" by dimension, then letter.
void sort_labels(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end(), [](const std::string& a, const std::string& b) {
    const auto da = std::stoul(a), db = std::stoul(b);
    return da != db ? da < db : a < b;
  });
}

std::string lambda_tag(std::size_t i, const char* stage) {
  return "lambda " + std::to_string(i) + " [" + stage + "]: ";
}

struct LambdaWork {
  LambdaReport rep;
  std::shared_ptr<const split::HeckeEnd> hecke;
  Correspondent corr;
  std::vector<ModuleRep> factors;
};

class Pipeline {
public:
  Pipeline(grp::GroupPtr g, const AnalyzeOptions& opt, std::shared_ptr<const SylowData> s, modrep::XPtr xg,
           modrep::XPtr xn, Field f)
      : g_(std::move(g)), opt_(opt), s_(std::move(s)), xg_(std::move(xg)), xn_(std::move(xn)), f_(std::move(f)) {}

  void run(KReport& r);

private:
  grp::GroupPtr g_;
  const AnalyzeOptions& opt_;
  std::shared_ptr<const SylowData> s_;
  modrep::XPtr xg_, xn_;
  Field f_;
  std::vector<LinearCharacter> chars_;
  std::vector<LambdaWork> work_;

  void analyze_lambda(std::size_t i);
  void properties(KReport& r);
};

void Pipeline::analyze_lambda(std::size_t i) {
  const auto& lam = chars_[i];
  LambdaWork& w = work_[i];
  LambdaReport& rep = w.rep;
  rep.index = i;
  rep.coords = lam.coords();
  rep.order = lam.order();
  const char* stage = "hecke";
  try {
    w.hecke = std::make_shared<const split::HeckeEnd>(g_, s_->n_table, lam, f_);
    const split::HeckeEnd& h = *w.hecke;
    rep.hecke_dim = h.dim();
    rep.induced_dim = h.induced().dim();
    stage = "mackey";
    rep.mackey_dim = split::mackey_dimension(*g_, s_->n_table, lam);
    stage = "split";
    w.corr = green_correspondent(h, s_->p, opt_.seed);
    for (const auto& su : w.corr.decomposition.summands) rep.summand_dims.push_back(su.module.dim());
    std::sort(rep.summand_dims.begin(), rep.summand_dims.end());
    const ModuleRep& u = w.corr.module();
    rep.dim = u.dim();
    rep.module = std::make_shared<const ModuleRep>(u);
    stage = "char-test";
    const auto ct = is_endotrivial_char(u, *s_);
    rep.brauer_vector = ct.witness;
    rep.endotrivial_char = ct.endotrivial;
    stage = "direct-test";
    rep.endotrivial_direct = is_endotrivial_direct(u, *s_);
    if (rep.endotrivial_char != rep.endotrivial_direct)
      throw EtkError("the character criterion and the End test disagree on the Green correspondent");
    stage = "chop";
    w.factors = split::chop(u, opt_.seed);
    rep.simple = w.factors.size() == 1;
  } catch (const split::FieldTooSmall&) {
    throw;
  } catch (const std::exception& ex) {
    throw EtkError(lambda_tag(i, stage) + ex.what());
  }
}

void Pipeline::run(KReport& r) {
  chars_ = all_characters(xn_);
  work_.assign(chars_.size(), {});
  for (std::size_t i = 0; i < chars_.size(); ++i) analyze_lambda(i);

  // Composition factor labels shared across the whole report.
  std::vector<ModuleRep> all;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < work_.size(); ++i)
    for (const auto& m : work_[i].factors) {
      all.push_back(m);
      owner.push_back(i);
    }
  const auto labels = split::factor_labels(all, opt_.seed);
  for (std::size_t k = 0; k < all.size(); ++k) work_[owner[k]].rep.factors.push_back(labels[k]);
  for (auto& w : work_) sort_labels(w.rep.factors);

  // Image of X(G) under restriction.
  std::set<std::size_t> image;
  for (const auto& mu : all_characters(xg_)) image.insert(restrict_character(mu, s_->n_table, xn_));
  if (image.size() != xg_->size()) r.caveats.push_back("x_restriction_not_injective");
  r.x_image.assign(image.begin(), image.end());

  for (auto& w : work_) {
    w.rep.in_x_image = image.count(w.rep.index) > 0;
    if (w.rep.endotrivial_char) r.k_elements.push_back(w.rep.index);
    r.lambdas.push_back(w.rep);
  }
  const std::set<std::size_t> k(r.k_elements.begin(), r.k_elements.end());

  r.k_invariant_factors = grp::invariant_factors_from_counts(k.size(), [&](std::uint64_t d) {
    std::uint64_t c = 0;
    for (auto i : k) c += d % chars_[i].order() == 0;
    return c;
  });
  r.x_image_invariant_factors = grp::invariant_factors_from_counts(image.size(), [&](std::uint64_t d) {
    std::uint64_t c = 0;
    for (auto i : image) c += d % chars_[i].order() == 0;
    return c;
  });
  if (std::includes(k.begin(), k.end(), image.begin(), image.end()) && k.size() % image.size() == 0) {
    r.tt_over_x = grp::invariant_factors_from_counts(k.size() / image.size(), [&](std::uint64_t d) {
      std::uint64_t c = 0;
      for (auto i : k) c += image.count(character_index(power(chars_[i], d))) > 0;
      return c / image.size();
    });
  } else {
    r.caveats.push_back("x_image_not_in_k");
  }

  if (opt_.properties) properties(r);

  if (opt_.tensor_power > 0) {
    std::optional<std::size_t> pick;
    for (auto i : k)
      if (!image.count(i) && r.lambdas[i].dim > 1) {
        pick = i;
        break;
      }
    if (!pick && !k.empty()) pick = *k.begin();
    std::size_t dim = 1;
    bool over = false;
    for (unsigned t = 0; t < opt_.tensor_power && pick; ++t) {
      dim *= r.lambdas[*pick].dim;
      over = over || dim > opt_.tensor_budget;
    }
    if (!pick) {
      r.caveats.push_back("tensor_power_skipped:no_class");
    } else if (over) {
      r.caveats.push_back("tensor_power_skipped:budget");
    } else {
      try {
        r.tensor = tensor_power_class(*r.lambdas[*pick].module, opt_.tensor_power, *s_, xg_, xn_);
        r.tensor_lambda = pick;
      } catch (const std::exception& ex) {
        throw EtkError(lambda_tag(*pick, "tensor-power") + ex.what());
      }
    }
  }
}

void Pipeline::properties(KReport& r) {
  PropertyReport& pr = r.properties;
  pr.ran = true;
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    pr.failures.push_back(msg);
  };
  const std::set<std::size_t> k(r.k_elements.begin(), r.k_elements.end());
  const std::size_t pord = s_->p.order();
  for (std::size_t i = 0; i < work_.size(); ++i) {
    const auto& w = work_[i];
    const std::string tag = "lambda " + std::to_string(i) + ": ";
    // (i) both endo-triviality tests on every summand within budget.
    for (std::size_t j = 0; j < w.corr.decomposition.summands.size(); ++j) {
      const auto& m = w.corr.decomposition.summands[j].module;
      if (j == w.corr.index) {
        ++pr.summands_tested;
        continue;  // compared in analyze_lambda
      }
      if (m.dim() > opt_.direct_test_budget) {
        ++pr.summands_skipped;
        continue;
      }
      ++pr.summands_tested;
      if (is_endotrivial_char(m, *s_).endotrivial != is_endotrivial_direct(m, *s_))
        throw EtkError(tag + "endo-triviality tests disagree on a non-correspondent summand");
    }
    // (ii) closure of K.
    if (k.count(i)) {
      if (!k.count(character_index(chars_[i].inverse()))) fail(pr.closed, tag + "inverse outside K");
      for (auto j : k)
        if (!k.count(character_index(chars_[i] * chars_[j])))
          fail(pr.closed, tag + "product with lambda " + std::to_string(j) + " outside K");
    }
    // (iii) duality.
    const std::size_t inv = character_index(chars_[i].inverse());
    if (!split::iso_test(work_[inv].corr.module(), modrep::dual(w.corr.module()), opt_.seed))
      fail(pr.duality, tag + "correspondent of the inverse is not the dual");
    // (iv) dimension congruence.
    if (w.rep.endotrivial_char && w.rep.dim % pord != 1 % pord)
      fail(pr.dim_congruence, tag + "endo-trivial correspondent has dim not 1 mod |P|");
    // (vi) Hecke dimension against the Mackey count.
    if (w.rep.hecke_dim != w.rep.mackey_dim) fail(pr.hecke_mackey, tag + "Hecke dimension differs from Mackey count");
    // Restriction coherence.
    if (w.rep.in_x_image && w.rep.dim != 1) fail(pr.restriction_coherent, tag + "X(G) class with dim > 1");
  }
  // (v) Krull-Schmidt stability under a second seed.
  const std::uint64_t seed2 = opt_.second_seed ? opt_.second_seed : opt_.seed + 1;
  for (std::size_t i = 0; i < work_.size(); ++i) {
    const std::string tag = "lambda " + std::to_string(i) + ": ";
    const auto c2 = green_correspondent(*work_[i].hecke, s_->p, seed2);
    std::vector<std::size_t> d2;
    for (const auto& su : c2.decomposition.summands) d2.push_back(su.module.dim());
    std::sort(d2.begin(), d2.end());
    if (d2 != work_[i].rep.summand_dims) fail(pr.ks_stable, tag + "summand dimensions depend on the seed");
    if (c2.decomposition.iso_class_count != work_[i].corr.decomposition.iso_class_count)
      fail(pr.ks_stable, tag + "isomorphism class count depends on the seed");
    if (!split::iso_test(c2.module(), work_[i].corr.module(), opt_.seed))
      fail(pr.ks_stable, tag + "Green correspondent depends on the seed");
  }
}

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

}  // namespace

KReport compute_K(grp::GroupPtr g, const std::string& name, const AnalyzeOptions& opt) {
  auto s = std::make_shared<const SylowData>(sylow_data(*g, opt.prime));
  auto xn = modrep::XStructure::make(s->n_table.table, opt.prime);
  auto xg = modrep::XStructure::make(g, opt.prime);
  const unsigned m = lcm_u(xn->exponent(), xg->exponent());
  unsigned e = m > 1 ? ffla::multiplicative_order(opt.prime, m) : 1;
  std::vector<std::string> field_caveats;
  if (opt.field_degree) {
    if (opt.field_degree % e) field_caveats.push_back("field_degree_raised_for_roots_of_unity");
    e = lcm_u(e, opt.field_degree);
  }
  while (true) {
    KReport r;
    r.group = name;
    r.group_order = g->order();
    r.prime = opt.prime;
    r.field_degree = e;
    r.sylow_order = s->p.order();
    r.sylow_type = s->type.name();
    r.normalizer_order = s->n.order();
    r.xn_structure = xn->ab.orders;
    r.seed = opt.seed;
    r.sylow = s;
    r.xg = xg;
    r.xn = xn;
    r.caveats = field_caveats;
    if (s->type.type != grp::TwoGroupType::klein_four && s->type.type != grp::TwoGroupType::dihedral)
      r.caveats.push_back("K_only");
    try {
      Pipeline(g, opt, s, xg, xn, ffla::FieldTable::make(opt.prime, e)).run(r);
      return r;
    } catch (const split::FieldTooSmall& ex) {
      const unsigned next = e * ex.degree_hint();
      if (next > opt.max_field_degree) throw EtkError(std::string("no splitting field found: ") + ex.what());
      e = next;
      field_caveats.push_back("field_extended_to_degree_" + std::to_string(e));
    }
  }
}

TheoremCheck theorem_check(const KReport& r, const Expectation& e) {
  TheoremCheck t;
  auto check = [&](bool ok, const std::string& what) { (ok ? t.passed : t.discrepancies).push_back(what); };
  check(r.k_invariant_factors == e.k_invariant_factors, "k_invariant_factors");
  check(r.x_image_invariant_factors == e.x_image_invariant_factors, "x_image_invariant_factors");
  check(r.tt_over_x == e.tt_over_x, "tt_over_x");
  std::vector<std::size_t> kd, nkd;
  for (const auto& l : r.lambdas) (l.endotrivial_char ? kd : nkd).push_back(l.dim);
  std::sort(kd.begin(), kd.end());
  std::sort(nkd.begin(), nkd.end());
  if (!e.k_dims.empty()) check(kd == e.k_dims, "k_dims");
  if (!e.non_k_dims.empty()) check(nkd == e.non_k_dims, "non_k_dims");
  for (const auto& l : r.lambdas) {
    if (!l.endotrivial_char || l.in_x_image) continue;
    const std::string tag = "lambda " + std::to_string(l.index) + " ";
    if (e.nontrivial_simple) check(l.simple == *e.nontrivial_simple, tag + "simple");
    if (!e.nontrivial_factor_dims.empty()) {
      std::vector<std::size_t> fd;
      for (const auto& f : l.factors) fd.push_back(std::stoul(f));
      std::sort(fd.begin(), fd.end());
      check(fd == e.nontrivial_factor_dims, tag + "factor_dims");
    }
  }
  if (e.cube_nontrivial) {
    const bool have = r.tensor && r.tensor->n == 3;
    const bool nontrivial = have && r.tensor->brauer_all_ones && r.tensor->x_index && r.tensor->order > 1;
    if (have) check(nontrivial == *e.cube_nontrivial, "cube_class");
  }
  if (!r.properties.ok()) t.discrepancies.push_back("property_suite");
  return t;
}

}  // namespace etk::core
