// Copyright 2026 The plcat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int         code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int          code = plcat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string model(const char* name) { return std::string(PLCAT_MODELS_DIR) + "/" + name; }

}  // namespace

TEST_CASE("word") {
  auto r = run({"word", "(1*(_+_))"});
  CHECK(r.code == 0);
  CHECK(r.out.find("length: 2") != std::string::npos);
  CHECK(r.out.find("lunit*") != std::string::npos);

  r = run({"word", "(0+1)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("unit cancellation to 0") != std::string::npos);
  CHECK(r.out.find("unit cancellation to 1") != std::string::npos);

  r = run({"word", "((_+_)*(_+_))", "--format", "structured"});
  CHECK(r.code == 3);
  const auto doc = json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["length"] == 4);

  CHECK(run({"word", "(_+"}).code == 2);
  CHECK(run({"word"}).code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "--model", model("pointed_sets.json"), "--format", "xml"}).code == 2);
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("coherence") != std::string::npos);
}

TEST_CASE("check passes on a good model and fails on a bad one") {
  auto r = run({"check", "--model", model("pointed_sets.json"), "--depth", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run({"check", "--model", model("pointed_sets_bad_i.json"), "--depth", "4", "--format",
           "structured"});
  CHECK(r.code == 1);
  const auto doc = json::parse(r.out);
  CHECK(doc["passed"] == false);
  json ce;
  for (const auto& rep : doc["reports"])
    if (!rep["passed"]) {
      ce = rep["counterexample"];
      break;
    }
  REQUIRE(ce.is_object());

  const std::string path = "test_cli_counterexample.json";
  std::ofstream(path) << ce.dump();
  CHECK(run({"check", "--model", model("pointed_sets_bad_i.json"), "--replay", path}).code == 1);
  CHECK(run({"check", "--model", model("pointed_sets.json"), "--replay", path}).code == 0);
  CHECK(run({"check", "--model", model("pointed_sets.json"), "--replay", "missing.json"}).code ==
        2);
}

TEST_CASE("bad model files") {
  CHECK(run({"check", "--model", "/nonexistent.json"}).code == 2);
  CHECK(run({"central", "--model", "/nonexistent.json", "P2", "P2"}).code == 2);
}

TEST_CASE("central") {
  auto r = run({"central", "--model", model("commutative_monoids.json"), "C3", "C3",
                "--format", "structured"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["central"].size() == 3);
  CHECK(doc["lineariser"] == true);
  CHECK(doc["addition"].size() == 3);

  r = run({"central", "--model", model("pointed_sets.json"), "P2", "P3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("no addition") != std::string::npos);

  CHECK(run({"central", "--model", model("pointed_sets.json"), "P2", "Q"}).code == 2);
  CHECK(run({"central", "--model", model("pointed_sets.json"), "P2"}).code == 2);
}

TEST_CASE("coherence") {
  auto r = run({"coherence", "--model", model("commutative_monoids.json"), "--n", "2",
                "--depth", "4", "--mode", "partially-linear", "--uniqueness-units", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("coherence.path_uniqueness") != std::string::npos);
  CHECK(run({"coherence", "--model", model("pointed_sets.json"), "--n", "7"}).code == 2);
  CHECK(run({"coherence", "--model", model("pointed_sets_bad_i.json"), "--n", "2", "--depth",
             "3"})
            .code == 1);
}
