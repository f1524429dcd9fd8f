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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace dnlab::cli {

using nlohmann::json;

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kBudgetExceeded = 3,
  kInvariantViolation = 4,
};

/// Subcommands: verdict, content, transfer, limsup, baseline.
bool is_subcommand(std::string_view name);

/// Parses a config file. Unreadable files and malformed JSON raise
/// ValidationError naming the line.
json load_config(const std::filesystem::path& path);

/// Validates `raw` for `subcommand` and fills every default, so the result
/// records exactly what ran. ValidationError names the offending field.
json resolve_config(const json& raw, std::string_view subcommand,
                    std::optional<std::uint64_t> seed_override = std::nullopt);

struct RunResult {
  int exit_code = kOk;
  /// {"subcommand", "config", "result", "timestamp"}; "error" on failure.
  json report;
  /// limsup only: r,shell_sum,lambda_member,min_content_ratio,qi_ratio_max
  std::optional<std::string> csv;
  std::string message;
};

/// Runs a resolved config. Never throws for domain, budget or invariant
/// failures; they come back as exit codes with the message in the report.
RunResult run(std::string_view subcommand, const json& config, int workers = 0);

/// The report with its "timestamp" field removed.
json without_timestamp(const json& report);

/// Writes <subcommand>.json (and <subcommand>.csv when present) into `dir`.
void write_outputs(const RunResult& result, std::string_view subcommand,
                   const std::filesystem::path& dir);

}  // namespace dnlab::cli
