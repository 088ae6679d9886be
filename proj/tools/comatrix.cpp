#include <iostream>

#include "CLI11.hpp"
#include "runner.hpp"

using namespace comatrix::cli;

int main(int argc, char** argv) {
  CLI::App app{"Comatrix corings, coring endomorphisms and invertible sub-bimodules over finite fields"};
  app.require_subcommand(1);

  RunOptions options;
  std::string path;
  std::string format = "text";
  bool no_timing = false;

  CLI::App* run_cmd = app.add_subcommand("run", "Run the tasks of a workspace file");
  run_cmd->add_option("workspace", path, "Workspace file (.cm)");
  run_cmd->add_option("--budget", options.budget, "Enumeration cap")->envname("COMATRIX_BUDGET")->check(CLI::PositiveNumber);
  run_cmd->add_option("--workers", options.workers, "Enumeration worker threads")
      ->envname("COMATRIX_WORKERS")
      ->check(CLI::Range(1u, 256u));
  run_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  run_cmd->add_flag("--seed-check", options.seed_check, "Re-run the fixture oracles");
  run_cmd->add_flag("--fail-fast", options.fail_fast, "Stop after the first failing task");
  run_cmd->add_flag("--no-timing", no_timing, "Omit elapsed_ms fields");

  CLI::App* fmt_cmd = app.add_subcommand("format", "Print a workspace file in canonical form");
  fmt_cmd->add_option("workspace", path, "Workspace file (.cm)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  options.timing = !no_timing;

  try {
    Workspace w;
    if (!path.empty()) {
      w = load_workspace(path);
    } else if (*run_cmd && !options.seed_check) {
      std::cerr << "run: a workspace file or --seed-check is required\n";
      return kUsage;
    }
    if (*fmt_cmd) {
      std::cout << serialize(w);
      return kPass;
    }
    RunResult r = run(w, options);
    std::cout << (format == "json" ? render_json(r.report) : render_text(r.report));
    return r.exit_code;
  } catch (const WorkspaceError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
