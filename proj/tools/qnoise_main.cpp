// qnoise command line: run named scenarios or config files, list the
// builtin scenarios, print the version. Data outputs are CSV plus a
// manifest; SVG plots are opt-in via --plot.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "qnoise/runner.hpp"
#include "qnoise/scenario.hpp"
#include "qnoise/version.hpp"

namespace {

std::vector<std::pair<std::string, std::string>> parse_overrides(
    const std::vector<std::string>& raw) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const std::string& item : raw) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw qnoise::ConfigError("--set expects section.key=value, got '" + item + "'");
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"charge-noise qubit decoherence simulator"};
  app.require_subcommand(1);

  std::string target;
  std::string out_dir;
  std::vector<std::string> raw_overrides;
  bool plot = false;
  unsigned threads = 0;

  CLI::App* run = app.add_subcommand("run", "run a builtin scenario or a config file");
  run->add_option("scenario", target, "builtin scenario name or config file path")
      ->required();
  run->add_option("--out", out_dir, "output directory (default: out/<scenario>)");
  run->add_option("--set", raw_overrides, "override as section.key=value (repeatable)");
  run->add_flag("--plot", plot, "also emit SVG plots next to the CSVs");
  run->add_option("--threads", threads, "worker threads (0 = hardware)");

  CLI::App* list = app.add_subcommand("list-scenarios", "list builtin scenarios");
  CLI::App* ver = app.add_subcommand("version", "print version");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ver->parsed()) {
      std::cout << "qnoise " << qnoise::version << "\n";
      return 0;
    }
    if (list->parsed()) {
      for (const qnoise::Scenario& s : qnoise::builtin_scenarios())
        std::cout << s.name << "\t" << s.description << "\n";
      return 0;
    }

    qnoise::RunOptions options;
    options.overrides = parse_overrides(raw_overrides);
    options.emit_plots = plot;
    options.threads = threads;

    // Resolve first so config errors surface before any directory is created.
    const qnoise::Scenario scenario = qnoise::resolve_scenario(target, options.overrides);
    options.out_dir = out_dir.empty() ? std::filesystem::path("out") / scenario.name
                                      : std::filesystem::path(out_dir);

    const qnoise::RunReport report = qnoise::run_scenario(target, options);
    for (const std::filesystem::path& f : report.files)
      std::cout << "wrote " << f.string() << "\n";
    return 0;
  } catch (const qnoise::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const qnoise::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
