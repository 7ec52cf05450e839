#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "e8/verify.hpp"

int main(int argc, char** argv) {
  e8::RunConfig cfg;
  CLI::App app{"Batch verification of the E8 identities, dimension counts and orbit reductions"};
  app.add_option("--suite", cfg.suite, "identities, dims, spin10, orbits, wspace or all");
  app.add_option("--backend", cfg.backend, "exact or approx (default: per suite)");
  app.add_option("--tol", cfg.tol, "numerical tolerance for approx checks");
  app.add_option("--seed", cfg.seed, "seed for all random draws");
  app.add_option("--samples", cfg.samples, "override per-check sample counts");
  app.add_option("--format", cfg.format, "json or markdown");
  app.add_option("--out", cfg.out, "write the report to this path instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    e8::validate(cfg);
    auto rep = e8::run(cfg);
    std::string text = cfg.format == "markdown" ? e8::report_markdown(rep) : e8::report_json(rep);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) {
        std::cerr << "cannot write " << cfg.out << "\n";
        return 2;
      }
      f << text;
    }
    for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
    std::cerr << rep.passed() << "/" << rep.checks.size() << " checks passed\n";
    return e8::exit_code(rep);
  } catch (const e8::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}
