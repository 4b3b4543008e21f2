#include <iostream>

#include "CLI11.hpp"
#include "etk/cli/run.hpp"

int main(int argc, char** argv) {
  etk::cli::RunConfig cfg;
  std::string format = "json";
  CLI::App app{"Trivial-source endo-trivial modules of a finite group"};
  app.add_option("--group", cfg.group, "builtin:NAME or a group file")->required();
  app.add_option("--prime", cfg.prime, "the prime p")->required();
  app.add_option("--field-degree", cfg.field_degree, "work over GF(p^e)");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--tensor-power", cfg.tensor_power, "identify the class of V^n for a nontrivial class V");
  app.add_option("--tensor-budget", cfg.tensor_budget, "largest dimension allowed for V^n");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--check-theorem", cfg.check_theorem, "compare against the catalog's expected values");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : etk::cli::kExitError;
  }
  cfg.format = format == "text" ? etk::cli::Format::text : etk::cli::Format::json;
  return etk::cli::run(cfg, std::cout, std::cerr);
}
