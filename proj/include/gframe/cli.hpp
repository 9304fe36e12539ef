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

// Batch front end: JSON config in, JSON report and CSV payloads out.

#ifndef GFRAME_CLI_HPP_
#define GFRAME_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gframe/core.hpp"

namespace gframe::cli {

inline constexpr const char* kToolName = "gframe";
inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kConfigError = 1, kInconsistent = 2 };

// Unreadable or unparsable config, or an output that cannot be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WeightSpec {
  // "inline", "constant", "step" or "ramp".
  std::string kind = "constant";
  std::vector<double> values;
  double value = 1.0;
  // step: low for x < at, high otherwise. ramp: low + (high - low) x.
  double low = 1.0;
  double high = 1.0;
  double at = 0.5;
};

struct SpaceSpec {
  Index grid_size = 0;
  Index fiber_dim = 1;
  WeightSpec weight;
  // Optional N x K scalar family, rows are grid points.
  std::vector<std::vector<double>> family_re;
  std::vector<std::vector<double>> family_im;
};

struct GeneratorSpec {
  // "indicator", "wide-indicator", "gaussian" or "custom".
  std::string preset = "indicator";
  Index grid_size = 16;
  // 0 selects the preset's default.
  Index radius = 0;
  // custom: CSV with header re,im and 2 * radius * grid_size records.
  std::string samples_path;
};

struct ZakSpec {
  // "indicator" or "gaussian".
  std::string window = "indicator";
  Index samples_per_period = 16;
  Index periods = 8;
};

struct HeisenbergSpec {
  double eps = 0.5;
  int dim = 1;
  Index resolution = 4096;
  Index frame_resolution = 256;
  // Random sequences use k in [-coefficient_range, coefficient_range].
  Index coefficient_range = 4;
  int trials = 50;
};

struct RunConfig {
  std::string mode;
  SpaceSpec space;
  double a_claimed = 1.0;
  GeneratorSpec generator;
  ZakSpec zak;
  HeisenbergSpec heisenberg;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
  std::string report_name = "report.json";
};

// Reads a config file; parse errors and unknown fields become diagnostics.
// Throws IoError when the file cannot be read.
std::vector<std::string> validate(const std::filesystem::path& config_path);

// Parses `text` into `config`; returns the diagnostics (empty when valid).
// Relative sample paths are resolved against `base_dir`.
std::vector<std::string> parse_config(const std::string& text,
                                      const std::filesystem::path& base_dir,
                                      RunConfig& config);

// Config echo, itself a valid config.
std::string config_to_json(const RunConfig& config);

// Runs a validated config and writes the report and CSVs into `out_dir`.
ExitCode run(const RunConfig& config, const std::filesystem::path& out_dir,
             std::ostream& diag);

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
};

// Load, validate, apply overrides, run. Every failure maps to an exit code
// with a message on `diag`.
ExitCode run_file(const std::filesystem::path& config_path,
                  const std::filesystem::path& out_dir,
                  const Overrides& overrides, std::ostream& diag);

// printf("%.17g")
std::string format_number(double value);

}  // namespace gframe::cli

#endif  // GFRAME_CLI_HPP_
