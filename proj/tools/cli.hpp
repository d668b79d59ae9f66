// Copyright 2026 The effkit Authors
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
#include <iosfwd>
#include <string>
#include <vector>

#include "effkit/symmetry.hpp"

namespace effkit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRejected = 1,  // recover: rejected verdict; verify: a suite failed
  kExitBadInput = 2,
  kExitIoError = 3,
};

struct RunConfig {
  std::size_t dim = 0;  // 0: take it from the input (recover only)
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::size_t trials = 64;
  Family family = Family::affine;
  std::string input;
  std::string output;  // "" or "-" means stdout
};

struct SynthParams {
  SymmetryKind kind = SymmetryKind::unitary;
  bool complement = false;
  int sign = 1;
};

/// Writes <output>.descriptor.json and <output>.affine.json (output defaults
/// to "symmetry").
int cmd_synth(const RunConfig& config, const SynthParams& params, std::ostream& out,
              std::ostream& err);
int cmd_recover(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// ---------------------------------------------------------------------------
// Property suites behind `verify`

enum class SuiteStatus { pass, fail, skipped };

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::pass;
  std::string detail;
};

std::vector<SuiteResult> run_verify_suites(std::size_t dim, std::uint64_t seed,
                                           std::size_t trials, double tol);

}  // namespace effkit::cli
