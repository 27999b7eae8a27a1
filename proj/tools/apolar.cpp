#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apolar/cli.hpp"

namespace {

int emit(const apolar::CommandResult& r, const std::string& json_path) {
  const std::string body = r.report.dump(2) + "\n";
  if (!r.text.empty()) std::cout << r.text << "\n";
  if (json_path.empty()) {
    if (r.text.empty()) std::cout << body;
  } else {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 1;
    }
    out << body;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apolarity and Hilbert scheme computations for cubic forms"};
  app.require_subcommand(1);

  apolar::RunConfig cfg;
  std::string json_path;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "q (rationals) or fp (random primes)")->check(CLI::IsMember({"q", "fp"}));
    sub->add_option("--primes", cfg.primes, "number of primes for --field fp")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--json", json_path, "write the JSON report to this path");
    sub->add_option("--vars", cfg.vars, "number of variables")->check(CLI::Range(1, 16));
    sub->add_flag("--timings", cfg.timings, "include wall-clock timings in the report");
  };

  std::string cubic, cubic2, kind, family;
  std::optional<std::string> family_file, sextic;
  std::vector<std::string> samples{"0", "1", "2", "3", "4"};

  auto* analyze = app.add_subcommand("analyze", "tangent space and smoothability analysis of a cubic");
  analyze->add_option("cubic", cubic, "cubic form in x0..x5")->required();
  common(analyze);

  auto* pencil = app.add_subcommand("pencil", "restriction of det ev to the line u*F1 + v*F2");
  pencil->add_option("cubic1", cubic, "F1 (coefficient u)")->required();
  pencil->add_option("cubic2", cubic2, "F2 (coefficient v)")->required();
  pencil->add_option("--family", family_file, "file with 15 quadric generators, linear in u");
  common(pencil);

  auto* construct = app.add_subcommand("construct", "generate a test cubic");
  construct->add_option("kind", kind, "gr26, waring:k, dvap or random")->required();
  construct->add_option("--sextic", sextic, "sextic in x0, x1, x2 for dvap");
  common(construct);

  auto* fam = app.add_subcommand("family", "apolar lengths along a family in t");
  fam->add_option("template", family, "polynomial in x0.. with parameter t")->required();
  fam->add_option("--samples", samples, "parameter values")->delimiter(',');
  common(fam);

  CLI11_PARSE(app, argc, argv);
  if (construct->parsed() && !construct->count("--field")) cfg.field = "q";

  try {
    if (analyze->parsed()) return emit(apolar::cmd_analyze(cubic, cfg), json_path);
    if (pencil->parsed()) return emit(apolar::cmd_pencil(cubic, cubic2, family_file, cfg), json_path);
    if (construct->parsed()) return emit(apolar::cmd_construct(kind, cfg, sextic), json_path);
    if (fam->parsed()) return emit(apolar::cmd_family(family, samples, cfg), json_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
