#include <unistd.h>

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "solidus/axioms/check.hpp"
#include "solidus/cli/session.hpp"

namespace {

int run_stream(std::istream& in, solidus::cli::Session& session, bool prompt) {
  std::string line;
  while (true) {
    if (prompt) std::cout << "solidus> " << std::flush;
    if (!std::getline(in, line)) break;
    const std::string out = session.run_command(line);
    if (!out.empty()) std::cout << out << '\n';
    if (session.quit_requested()) break;
  }
  if (prompt) std::cout << '\n';
  return session.checks_failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solidus: exact arithmetic for external numbers"};
  std::string batch;
  bool headless_check = false;
  solidus::axioms::GeneratorConfig cfg;
  std::size_t count = 1000;
  std::string only;
  app.add_option("--batch", batch, "Execute commands from a file, one per line")->check(CLI::ExistingFile);
  app.add_flag("--check", headless_check, "Run the check catalog and print the report");
  app.add_option("--seed", cfg.seed, "Generator seed for --check");
  app.add_option("--count", count, "Samples per check for --check");
  app.add_option("--only", only, "Run a single check (catalog or mutant) with --check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (headless_check && !batch.empty()) {
    std::cerr << "--check and --batch are mutually exclusive\n";
    return 2;
  }

  if (headless_check) {
    std::vector<solidus::axioms::CheckReport> reports;
    try {
      if (only.empty()) {
        reports = solidus::axioms::run_catalog(cfg, count);
      } else {
        reports.push_back(solidus::axioms::check(only, cfg, count));
      }
    } catch (const std::exception& e) {
      std::cerr << solidus::cli::render_error(e) << '\n';
      return 2;
    }
    bool failed = false;
    for (const auto& r : reports) {
      std::cout << solidus::axioms::render_report(r);
      failed = failed || !r.passed();
    }
    return failed ? 1 : 0;
  }

  solidus::cli::Session session(cfg);
  if (!batch.empty()) {
    std::ifstream in(batch);
    if (!in) {
      std::cerr << "cannot open " << batch << '\n';
      return 2;
    }
    return run_stream(in, session, false);
  }
  return run_stream(std::cin, session, isatty(STDIN_FILENO) != 0);
}
