#include <iostream>

#include <CLI11.hpp>

#include "fivevec/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of the five-vector calculus on polynomial models"};
  app.require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite against a model file");
  std::string model_path, suite, tol = "1e-9", format = "text";
  std::uint64_t seed = 0;
  bool strict = false;
  verify->add_option("--model", model_path, "TOML model file")->required();
  verify->add_option("--suite", suite, "flat | curved | gauge | clifford | all")->required()
      ->check(CLI::IsMember(fv::suite_names()));
  verify->add_option("--seed", seed, "Seed for generated inputs");
  verify->add_option("--tol", tol, "Tolerance of numeric oracles (decimal)");
  verify->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--strict", strict, "Treat flagged checks as failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    fv::ModelFile model = fv::load_model(model_path);
    fv::Report report = fv::run_suite(model, suite, seed, tol);
    std::cout << fv::emit_report(report, format);
    return fv::exit_code(report, strict);
  } catch (const fv::ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const fv::SuiteError& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
