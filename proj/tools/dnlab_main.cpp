// Copyright 2026 The dnlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch front end: dnlab <subcommand> --config run.json --out reports/

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dnlab/cli.hpp"
#include "dnlab/errors.hpp"

int main(int argc, char** argv) {
  namespace cli = dnlab::cli;
  CLI::App app{"Series, content, transference and limsup experiments for weighted affine forms"};
  std::string subcommand;
  std::string config_path;
  std::string out_dir = ".";
  int workers = 0;
  std::optional<std::uint64_t> seed;
  app.add_option("subcommand", subcommand, "verdict | content | transfer | limsup | baseline")
      ->required();
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--out", out_dir, "Directory for the JSON (and CSV) reports");
  app.add_option("--workers", workers, "Worker threads (0 = hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Overrides the config seed");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kConfigError;
  }

  if (!cli::is_subcommand(subcommand)) {
    std::cerr << "dnlab: unknown subcommand '" << subcommand << "'\n";
    return cli::kConfigError;
  }
  cli::json config;
  try {
    config = cli::resolve_config(cli::load_config(config_path), subcommand, seed);
  } catch (const dnlab::Error& e) {
    std::cerr << "dnlab: " << e.what() << '\n';
    return cli::kConfigError;
  }

  const cli::RunResult result = cli::run(subcommand, config, workers);
  try {
    cli::write_outputs(result, subcommand, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "dnlab: " << e.what() << '\n';
    return cli::kConfigError;
  }
  if (result.exit_code != cli::kOk) std::cerr << "dnlab: " << result.message << '\n';
  return result.exit_code;
}
