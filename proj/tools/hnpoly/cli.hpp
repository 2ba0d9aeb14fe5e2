// Copyright 2026 The hnpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HNPOLY_TOOLS_CLI_HPP_
#define HNPOLY_TOOLS_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hnpoly/hn_data.hpp"
#include "hnpoly/rational.hpp"

namespace hnpoly::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitIo = 4,
  kExitRange = 5,
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedInput {
  std::string kind;  // "hn", "filtration" or "p1_bundle"
  HNData data;
  std::vector<std::string> warnings;
};

// Input is one JSON object with exactly one of
//   {"hn":        {"slopes": ["p/q", ...], "ranks": [int, ...]}}
//   {"filtration": {"jumps": ["p/q", ...], "step_dims": [int, ...]}}
//   {"p1_bundle": {"degrees": [int, ...], "mults": [int, ...]}}
// Unknown keys are rejected.
LoadedInput parse_input(std::string_view json_text);
LoadedInput load_input(const std::filesystem::path& path);

// Comma-separated positive integers, e.g. "16,64,256".
std::vector<std::uint64_t> parse_m_list(std::string_view text);

// --grid-bound wins over the HNPOLY_GRID_BOUND environment variable; the
// default applies when neither is set.
std::uint64_t resolve_grid_bound(const std::optional<std::string>& flag,
                                 const char* env_value);

std::string analyze_report(const LoadedInput& input);

struct ProbOptions {
  Rational z;
  std::vector<std::uint64_t> m_values;
  std::uint64_t grid_bound = 0;
  std::optional<std::uint64_t> mc_samples;
  std::uint64_t seed = 1;
};
std::string prob_csv(const LoadedInput& input, const ProbOptions& options);

struct TensorOptions {
  Rational z;
  std::vector<std::uint64_t> m_values;
  std::uint64_t grid_bound = 0;
};
std::string tensor_csv(const LoadedInput& input, const TensorOptions& options);

// Writes to a temporary sibling and renames it into place, so a failed run
// never leaves a partial file behind. Throws IoError.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace hnpoly::cli

#endif  // HNPOLY_TOOLS_CLI_HPP_
