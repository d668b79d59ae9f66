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

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "effkit/error.hpp"
#include "effkit/version.hpp"
#include "json_io.hpp"

namespace effkit::cli {

namespace {

using io::Json;
using Clock = std::chrono::steady_clock;

bool to_stdout(const std::string& path) { return path.empty() || path == "-"; }

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << text;
  return static_cast<bool>(f);
}

// Returns kExitOk or kExitIoError.
int emit(const std::string& path, const Json& doc, std::ostream& out, std::ostream& err) {
  const std::string text = doc.dump(2) + "\n";
  if (to_stdout(path)) {
    out << text;
    return kExitOk;
  }
  if (!write_file(path, text)) {
    err << "error: cannot write " << path << "\n";
    return kExitIoError;
  }
  return kExitOk;
}

Json config_json(const RunConfig& c) {
  return Json{{"dim", c.dim},         {"seed", c.seed},         {"tol", c.tol},
              {"trials", c.trials},   {"family", to_string(c.family)},
              {"input", c.input},     {"output", c.output}};
}

Json report_header(const char* command, const RunConfig& c, Clock::time_point start) {
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return Json{{"tool", "effkit"},
              {"version", kVersion},
              {"command", command},
              {"config", config_json(c)},
              {"wall_clock_seconds", seconds}};
}

std::string validate_common(const RunConfig& c) {
  if (c.trials < 1) return "--trials must be ≥ 1";
  if (!(c.tol > 0.0)) return "--tol must be positive";
  return {};
}

}  // namespace

int cmd_synth(const RunConfig& config, const SynthParams& params, std::ostream& out,
              std::ostream& err) {
  std::string problem = validate_common(config);
  if (problem.empty() && config.dim < min_dim(config.family))
    problem = "--dim must be ≥ " + std::to_string(min_dim(config.family)) + " for family " +
              std::string(to_string(config.family));
  if (problem.empty() && params.complement && config.family != Family::affine)
    problem = "--complement is only valid for the affine family";
  if (problem.empty() && params.sign == -1 && config.family != Family::triple_hermitian)
    problem = "--sign -1 is only valid for the triple_hermitian family";
  if (!problem.empty()) {
    err << "error: " << problem << "\n";
    return kExitBadInput;
  }

  Rng rng(config.seed);
  const SymmetryDescriptor d =
      random_descriptor(config.dim, params.kind, params.complement, params.sign, rng);
  const std::string prefix = config.output.empty() ? "symmetry" : config.output;
  const std::string descriptor_path = prefix + ".descriptor.json";
  const std::string affine_path = prefix + ".affine.json";
  if (!write_file(descriptor_path, io::to_json(d).dump(2) + "\n") ||
      !write_file(affine_path, io::to_json(to_affine_rep(d)).dump(2) + "\n")) {
    err << "error: cannot write under prefix " << prefix << "\n";
    return kExitIoError;
  }
  out << descriptor_path << "\n" << affine_path << "\n";
  return kExitOk;
}

int cmd_recover(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  if (const std::string problem = validate_common(config); !problem.empty()) {
    err << "error: " << problem << "\n";
    return kExitBadInput;
  }

  std::ifstream in(config.input, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << config.input << "\n";
    return kExitIoError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  io::MapFile map;
  try {
    map = io::map_from_json(Json::parse(buffer.str()));
  } catch (const Json::parse_error& e) {
    err << "error: malformed JSON in " << config.input << ": " << e.what() << "\n";
    return kExitBadInput;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  RunConfig effective = config;
  const std::size_t dim = io::map_dim(map);
  if (config.dim != 0 && config.dim != dim) {
    err << "error: --dim " << config.dim << " does not match the map dimension " << dim << "\n";
    return kExitBadInput;
  }
  effective.dim = dim;
  if (dim < min_dim(config.family)) {
    err << "error: family " << to_string(config.family) << " requires dim ≥ "
        << min_dim(config.family) << "\n";
    return kExitBadInput;
  }

  RecoverOptions opts;
  opts.tol = config.tol;
  opts.trials = config.trials;
  opts.seed = config.seed;
  const RecoveryReport report = recover(io::oracle_from_map(map), config.family, opts);

  Json doc = report_header("recover", effective, start);
  doc["report"] = io::to_json(report);
  if (const int rc = emit(config.output, doc, out, err); rc != kExitOk) return rc;
  if (!report.canonical()) {
    err << "rejected: " << report.reason << "\n";
    return kExitRejected;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  std::string problem = validate_common(config);
  if (problem.empty() && config.dim < 2) problem = "--dim must be ≥ 2";
  if (!problem.empty()) {
    err << "error: " << problem << "\n";
    return kExitBadInput;
  }

  const auto results = run_verify_suites(config.dim, config.seed, config.trials, config.tol);
  Json suites = Json::array();
  std::string failing;
  for (const auto& r : results) {
    const char* status = r.status == SuiteStatus::pass   ? "pass"
                         : r.status == SuiteStatus::fail ? "fail"
                                                         : "skipped";
    suites.push_back(Json{{"name", r.name}, {"status", status}, {"detail", r.detail}});
    if (r.status == SuiteStatus::fail) failing += (failing.empty() ? "" : ", ") + r.name;
  }
  Json doc = report_header("verify", config, start);
  doc["suites"] = std::move(suites);
  doc["passed"] = failing.empty();
  if (const int rc = emit(config.output, doc, out, err); rc != kExitOk) return rc;
  if (!failing.empty()) {
    err << "failing suites: " << failing << "\n";
    return kExitRejected;
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"effkit: automorphisms of the effect interval [0, I]"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunConfig config;
  SynthParams params;
  std::string family = "affine";
  std::string kind = "unitary";

  const std::vector<std::string> families = {"affine", "triple_effects", "triple_hermitian"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "RNG seed");
    sub->add_option("--tol", config.tol, "acceptance tolerance for residuals");
    sub->add_option("--trials", config.trials, "samples per probe");
    sub->add_option("--family", family, "affine | triple_effects | triple_hermitian")
        ->check(CLI::IsMember(families));
    sub->add_option("--output", config.output, "output path (prefix for synth)");
  };

  CLI::App* synth = app.add_subcommand("synth", "synthesize a canonical automorphism");
  add_common(synth);
  synth->add_option("--dim", config.dim, "Hilbert-space dimension")->required();
  synth->add_option("--kind", kind, "unitary | antiunitary")
      ->check(CLI::IsMember({"unitary", "antiunitary"}));
  synth->add_flag("--complement", params.complement, "compose with A ↦ I − A");
  synth->add_option("--sign", params.sign, "1 or -1")->check(CLI::IsMember({1, -1}));

  CLI::App* recover_cmd = app.add_subcommand("recover", "classify a map and recover its form");
  add_common(recover_cmd);
  recover_cmd->add_option("--input", config.input, "descriptor or affine-map JSON")->required();
  recover_cmd->add_option("--dim", config.dim, "expected dimension");

  CLI::App* verify = app.add_subcommand("verify", "run the property suites");
  add_common(verify);
  verify->add_option("--dim", config.dim, "Hilbert-space dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitBadInput;
  }

  config.family = parse_family(family);
  try {
    if (*synth) {
      params.kind = parse_kind(kind);
      return cmd_synth(config, params, out, err);
    }
    if (*recover_cmd) return cmd_recover(config, out, err);
    return cmd_verify(config, out, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace effkit::cli
