// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// transmon run <scenario.isea>...  [--trace <path>] [--limit <cycles>] [--quiet]
// transmon analyze <scenario.isea>
//
// Exit codes: 0 clean run, 1 expectation mismatches, 2 scenario errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "transmon/analysis.hpp"
#include "transmon/scenario.hpp"
#include "transmon/sim.hpp"
#include "transmon/trace.hpp"

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses and validates; prints warnings (and errors) to stderr. Returns
// nothing when errors block the run.
std::optional<transmon::Scenario> load_scenario(const std::string& path,
                                                bool quiet) {
  const auto text = read_file(path);
  if (!text) {
    std::cerr << path << ": cannot read file\n";
    return std::nullopt;
  }
  try {
    transmon::Scenario sc = transmon::parse(*text);
    if (!quiet) {
      for (const transmon::Finding& f : transmon::validate(sc)) {
        std::cerr << path << ":" << f.line << ": warning: " << f.message
                  << "\n";
      }
    }
    return sc;
  } catch (const transmon::ParseError& e) {
    std::cerr << path << ": error: " << e.what() << "\n";
    return std::nullopt;
  }
}

int run_command(const std::vector<std::string>& paths,
                const std::string& trace_path,
                std::optional<std::uint64_t> limit, bool quiet) {
  int exit_code = 0;
  for (const std::string& path : paths) {
    const auto sc = load_scenario(path, quiet);
    if (!sc) {
      exit_code = 2;
      continue;
    }
    const transmon::Engine::RunResult result =
        transmon::run_scenario(*sc, limit);
    const std::string trace = transmon::format_trace(result.events);
    if (!trace_path.empty()) {
      std::ofstream out(trace_path, std::ios::binary);
      if (!out) {
        std::cerr << trace_path << ": cannot write trace file\n";
        return 2;
      }
      out << trace;
    } else if (!quiet) {
      std::cout << trace;
    }
    if (paths.size() > 1) {
      std::cout << "file=" << path << "\n";
    }
    std::cout << result.report.render();
    if (result.report.mismatches > 0 && exit_code == 0) {
      exit_code = 1;
    }
  }
  return exit_code;
}

int analyze_command(const std::string& path) {
  const auto sc = load_scenario(path, /*quiet=*/false);
  if (!sc) {
    return 2;
  }
  std::cout << transmon::analyze(*sc).render();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transaction-level simulator of a policy-enforcing bus fabric"};
  app.require_subcommand(1);

  std::vector<std::string> run_paths;
  std::string trace_path;
  std::optional<std::uint64_t> limit;
  bool quiet = false;
  CLI::App* run = app.add_subcommand("run", "Simulate scenario files");
  run->add_option("scenario", run_paths, "Scenario file(s)")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--trace", trace_path, "Write the trace to this file");
  run->add_option("--limit", limit, "Override the scenario cycle limit");
  run->add_flag("--quiet", quiet, "Suppress trace output and warnings");

  std::string analyze_path;
  CLI::App* an = app.add_subcommand("analyze", "Static policy-set analysis");
  an->add_option("scenario", analyze_path, "Scenario file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    if (!trace_path.empty() && run_paths.size() > 1) {
      std::cerr << "--trace requires a single scenario file\n";
      return 2;
    }
    return run_command(run_paths, trace_path, limit, quiet);
  }
  return analyze_command(analyze_path);
}
