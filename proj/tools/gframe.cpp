// Copyright 2026 The gframe Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// gframe --config run.json [--out dir] [--seed n] [--tol t] [--validate-only]

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gframe/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = gframe::cli;
  CLI::App app{"Weighted g-frame analyzer", cli::kToolName};
  app.set_version_flag("--version", cli::kVersion);

  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool validate_only = false;
  app.add_option("--config", config_path, "JSON run configuration")
      ->required();
  app.add_option("--out", out_dir, "Output directory for report and CSVs");
  auto* seed_opt = app.add_option("--seed", seed, "Override the config seed");
  auto* tol_opt =
      app.add_option("--tol", tol, "Override the verdict tolerance");
  app.add_flag("--validate-only", validate_only,
               "Check the config and print diagnostics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kConfigError;
  }

  if (validate_only) {
    try {
      const auto diags = cli::validate(config_path);
      for (const auto& d : diags) std::cerr << "config error: " << d << '\n';
      if (!diags.empty()) return cli::kConfigError;
      std::cout << "valid\n";
      return cli::kOk;
    } catch (const cli::IoError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return cli::kConfigError;
    }
  }

  cli::Overrides overrides;
  if (*seed_opt) overrides.seed = seed;
  if (*tol_opt) overrides.tolerance = tol;
  return cli::run_file(config_path, out_dir, overrides, std::cerr);
}
