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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "effkit/version.hpp"
#include "json_io.hpp"

using namespace effkit;
using effkit::io::Json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "effkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("effkit_cli_" + std::to_string(::getpid()) + "_" +
                                         std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  static inline int counter = 0;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  return Json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

}  // namespace

TEST_CASE("synth writes descriptor and affine map") {
  TempDir tmp;
  const std::string prefix = tmp.file("s");
  const auto r = run({"synth", "--dim", "3", "--seed", "7", "--kind", "unitary", "--output", prefix});
  REQUIRE(r.code == cli::kExitOk);
  const Json d = read_json(prefix + ".descriptor.json");
  CHECK(d["kind"] == "unitary");
  CHECK(d["complement"] == false);
  CHECK(d["sign"] == 1);
  CHECK(d["u"]["dim"] == 3);
  const auto desc = io::descriptor_from_json(d);
  CHECK(desc.u == SymmetryDescriptor::make(SymmetryKind::unitary, haar_unitary(3, 7)).u);

  const Json a = read_json(prefix + ".affine.json");
  CHECK(a["dim"] == 3);
  CHECK(a["linear"].size() == 9);
  const auto rep = io::affine_from_json(a);
  CHECK(max_abs_difference(rep.linear, to_affine_rep(desc).linear) == 0.0);

  // Same seed, same bytes.
  const std::string again = tmp.file("t");
  REQUIRE(run({"synth", "--dim", "3", "--seed", "7", "--output", again}).code == 0);
  std::ifstream f1(prefix + ".descriptor.json"), f2(again + ".descriptor.json");
  CHECK(std::string(std::istreambuf_iterator<char>(f1), {}) ==
        std::string(std::istreambuf_iterator<char>(f2), {}));
}

TEST_CASE("synth flag combinations") {
  TempDir tmp;
  const std::string p = tmp.file("c");
  REQUIRE(run({"synth", "--dim", "3", "--kind", "unitary", "--complement", "--output", p}).code == 0);
  CHECK(read_json(p + ".descriptor.json")["complement"] == true);

  REQUIRE(run({"synth", "--dim", "3", "--kind", "antiunitary", "--sign", "-1", "--family",
               "triple_hermitian", "--output", p})
              .code == 0);
  CHECK(read_json(p + ".descriptor.json")["sign"] == -1);

  CHECK(run({"synth", "--dim", "2", "--family", "triple_effects", "--output", p}).code == 2);
  CHECK(run({"synth", "--dim", "3", "--family", "triple_effects", "--complement", "--output", p}).code == 2);
  CHECK(run({"synth", "--dim", "3", "--sign", "-1", "--output", p}).code == 2);
  CHECK(run({"synth", "--dim", "3", "--sign", "3", "--output", p}).code == 2);
  CHECK(run({"synth", "--dim", "3", "--kind", "orthogonal", "--output", p}).code == 2);
  CHECK(run({"synth", "--dim", "1", "--output", p}).code == 2);
  CHECK(run({"synth", "--output", p}).code == 2);
  CHECK(run({"synth", "--dim", "3", "--output", tmp.file("missing/dir/x")}).code == 3);
}

TEST_CASE("parse errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "--dim", "three"}).code == 2);
}

TEST_CASE("recover round trip from synth output") {
  TempDir tmp;
  const std::string p = tmp.file("rt");
  REQUIRE(run({"synth", "--dim", "4", "--seed", "3", "--kind", "antiunitary", "--complement",
               "--output", p})
              .code == 0);
  const auto truth = io::descriptor_from_json(read_json(p + ".descriptor.json"));
  for (const std::string file : {p + ".descriptor.json", p + ".affine.json"}) {
    const std::string report = tmp.file("report.json");
    const auto r = run({"recover", "--input", file, "--seed", "5", "--output", report});
    REQUIRE(r.code == 0);
    const Json j = read_json(report);
    CHECK(j["tool"] == "effkit");
    CHECK(j["version"] == kVersion);
    CHECK(j["report"]["verdict"] == "canonical");
    const auto got = io::descriptor_from_json(j["report"]["descriptor"]);
    CHECK(got.kind == truth.kind);
    CHECK(got.complement);
    CHECK(distance(got.u, truth.u) <= 1e-7);
    CHECK(j["report"]["max_residual"].get<double>() <= 1e-8);
  }

  // stdout when no output path is given.
  const auto r = run({"recover", "--input", p + ".descriptor.json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["report"]["verdict"] == "canonical");

  CHECK(run({"recover", "--input", p + ".descriptor.json", "--dim", "5"}).code == 2);
  CHECK(run({"recover", "--input", p + ".descriptor.json", "--dim", "4"}).code == 0);
}

TEST_CASE("recover reports are reproducible") {
  TempDir tmp;
  const std::string p = tmp.file("rep");
  REQUIRE(run({"synth", "--dim", "3", "--seed", "11", "--output", p}).code == 0);
  auto report = [&] {
    auto r = run({"recover", "--input", p + ".affine.json", "--seed", "2", "--family",
                  "triple_effects"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j.contains("wall_clock_seconds"));
    j.erase("wall_clock_seconds");
    return j.dump();
  };
  CHECK(report() == report());
}

TEST_CASE("recover rejects A/2 with a probe reason") {
  TempDir tmp;
  const std::size_t n = 3;
  RealMatrix half(n * n, n * n);
  for (std::size_t k = 0; k < n * n; ++k) half(k, k) = 0.5;
  const std::string file = tmp.file("half.json");
  write_text(file, io::to_json(AffineMapRep(n, half, ComplexMatrix(n))).dump());
  const auto r = run({"recover", "--input", file});
  CHECK(r.code == cli::kExitRejected);
  CHECK(r.err.find("projection preservation") != std::string::npos);
  const Json j = Json::parse(r.out);
  CHECK(j["report"]["verdict"] == "rejected");
  CHECK(j["report"]["reason"].get<std::string>().find("projection preservation") != std::string::npos);
}

TEST_CASE("recover input errors") {
  TempDir tmp;
  const std::string bad = tmp.file("bad.json");
  write_text(bad, "{\"kind\": \"unitary\", \"u\": ");
  CHECK(run({"recover", "--input", bad}).code == 2);

  const std::string wrong = tmp.file("wrong.json");
  write_text(wrong, R"({"kind": "sideways", "u": {"dim": 1, "data": [[[1, 0]]]}, "complement": false, "sign": 1})");
  CHECK(run({"recover", "--input", wrong}).code == 2);

  const std::string neither = tmp.file("neither.json");
  write_text(neither, R"({"dim": 2})");
  CHECK(run({"recover", "--input", neither}).code == 2);

  CHECK(run({"recover", "--input", tmp.file("absent.json")}).code == 3);
  CHECK(run({"recover"}).code == 2);

  // Dimension below the family minimum.
  const std::string p = tmp.file("d2");
  REQUIRE(run({"synth", "--dim", "2", "--output", p}).code == 0);
  CHECK(run({"recover", "--input", p + ".descriptor.json", "--family", "triple_effects"}).code == 2);
  CHECK(run({"recover", "--input", p + ".descriptor.json"}).code == 0);

  // Unwritable report path.
  CHECK(run({"recover", "--input", p + ".descriptor.json", "--output", tmp.file("no/such/r.json")})
            .code == 3);
}

TEST_CASE("verify") {
  const auto full = run({"verify", "--dim", "4", "--seed", "1", "--trials", "100"});
  INFO(full.err);
  CHECK(full.code == 0);
  const Json j = Json::parse(full.out);
  CHECK(j["passed"] == true);
  CHECK(j["suites"].size() >= 8);

  CHECK(run({"verify", "--dim", "3", "--trials", "1"}).code == 0);
  CHECK(run({"verify", "--dim", "1"}).code == 2);
  CHECK(run({"verify", "--dim", "2", "--trials", "5"}).code == 0);
}

TEST_CASE("verify reports failing suites") {
  // A tolerance below rounding noise makes the residual gates fail.
  const auto r = run({"verify", "--dim", "3", "--trials", "5", "--tol", "1e-30"});
  CHECK(r.code == cli::kExitRejected);
  CHECK_FALSE(r.err.empty());
  CHECK(Json::parse(r.out)["passed"] == false);
}
