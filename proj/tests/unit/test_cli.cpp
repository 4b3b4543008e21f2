#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "etk/cli/catalog.hpp"
#include "etk/cli/run.hpp"
#include "json.hpp"

using namespace etk;
using namespace etk::cli;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cfg(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(const std::string& group) {
  RunConfig c;
  c.group = group;
  return c;
}

}  // namespace

TEST_CASE("every builtin entry passes validation") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    CHECK_NOTHROW(build_validated(e));
  }
  CHECK(find_entry("C9*3A6") != nullptr);
  CHECK(find_entry("nope") == nullptr);
}

TEST_CASE("projective line groups have the right orders") {
  for (auto [p, e, n] : {std::tuple{3u, 1u, 12u}, {5u, 1u, 60u}, {7u, 1u, 168u}, {3u, 2u, 360u}, {13u, 1u, 1092u}}) {
    CHECK(grp::GroupTable::enumerate(projective_line_group(p, e, true)).order() == n);
    CHECK(grp::GroupTable::enumerate(projective_line_group(p, e, false)).order() == 2 * n);
  }
}

TEST_CASE("JSON report for A5") {
  auto cfg = config("builtin:A5");
  cfg.prime = 2;
  const auto o = run_cfg(cfg);
  REQUIRE(o.code == kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["schema"] == 1);
  CHECK(j["group"] == "A5");
  CHECK(j["field"]["p"] == 2);
  CHECK(j["field"]["e"] == 2);
  CHECK(j["sylow"]["order"] == 4);
  CHECK(j["sylow"]["type"] == "klein_four");
  CHECK(j["normalizer_order"] == 12);
  CHECK(j["xn_structure"] == nlohmann::json::array({3}));
  CHECK(j["k_invariant_factors"] == nlohmann::json::array({3}));
  CHECK(j["x_image_invariant_factors"] == nlohmann::json::array());
  CHECK(j["tt_over_x"] == nlohmann::json::array({3}));
  REQUIRE(j["lambdas"].size() == 3);
  std::vector<int> dims;
  for (const auto& l : j["lambdas"]) {
    dims.push_back(l["dim_correspondent"]);
    for (auto key : {"order", "brauer_vector", "endotrivial", "simple", "factors"}) CHECK(l.contains(key));
  }
  CHECK(dims == std::vector<int>{1, 5, 5});
  CHECK(j["seed"] == 1);
  CHECK_FALSE(j.contains("theorem_check"));
}

TEST_CASE("reports do not depend on the seed") {
  auto a = config("builtin:3A6"), b = config("builtin:3A6");
  b.seed = 987654321;
  auto strip = [](std::string s) {
    auto j = nlohmann::json::parse(s);
    j.erase("seed");
    return j.dump();
  };
  const auto oa = run_cfg(a), ob = run_cfg(b);
  REQUIRE(oa.code == 0);
  REQUIRE(ob.code == 0);
  CHECK(strip(oa.out) == strip(ob.out));
}

TEST_CASE("theorem check and exit codes") {
  auto cfg = config("builtin:PSL(2,7)");
  cfg.check_theorem = true;
  const auto ok = run_cfg(cfg);
  CHECK(ok.code == kExitOk);
  CHECK(nlohmann::json::parse(ok.out)["theorem_check"]["status"] == "pass");

  cfg = config("builtin:PGL(2,5)");
  cfg.check_theorem = true;
  CHECK(nlohmann::json::parse(run_cfg(cfg).out)["theorem_check"]["status"] == "no_expectation");

  CHECK(run_cfg(config("builtin:M24")).code == kExitError);
  CHECK(run_cfg(config("/nonexistent/group.grp")).code == kExitError);
  auto p3 = config("builtin:A5");
  p3.prime = 3;
  CHECK(run_cfg(p3).code == kExitError);
}

TEST_CASE("group files and text output") {
  const std::string path = "test_cli_a4.grp";
  {
    std::ofstream f(path);
    f << "# A4 on four points\nperm 4\n(1,2,3)\n(1,2)(3,4)\n";
  }
  auto cfg = config(path);
  cfg.format = Format::text;
  const auto o = run_cfg(cfg);
  std::remove(path.c_str());
  CHECK(o.code == kExitOk);
  CHECK(o.out.find("K [3], X(G) image [3], K/X []") != std::string::npos);
}

TEST_CASE("tensor power section") {
  auto cfg = config("builtin:A5");
  cfg.tensor_power = 2;
  const auto j = nlohmann::json::parse(run_cfg(cfg).out);
  REQUIRE(j.contains("tensor_power"));
  CHECK(j["tensor_power"]["dim"] == 25);
  // V (x) V carries lambda^2, which does not come from X(G) = 1.
  CHECK(j["tensor_power"]["brauer_all_ones"] == true);
  CHECK(j["tensor_power"]["xn_class"] == 2);
  CHECK(j["tensor_power"]["one_dim_plus_projective"] == false);
  CHECK(j["tensor_power"]["x_class"] == nullptr);
  cfg.tensor_budget = 10;
  const auto k = nlohmann::json::parse(run_cfg(cfg).out);
  CHECK_FALSE(k.contains("tensor_power"));
  CHECK(k["caveats"] == nlohmann::json::array({"tensor_power_skipped:budget"}));
}
