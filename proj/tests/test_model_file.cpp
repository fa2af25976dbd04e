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

#include "doctest.h"
#include "plcat/checks.hpp"
#include "plcat/model_file.hpp"

using namespace plcat;

TEST_CASE("pointed sets by size") {
  const auto m = parse_model(R"({"schema_version": 1, "kind": "pointed_sets", "objects": [2, 3]})");
  CHECK(m->kind() == "pointed_sets");
  CHECK(m->objects().size() == 2);
  CHECK(m->find("P2").has_value());
  CHECK(m->find("P3").has_value());
  CHECK_FALSE(m->find("P4").has_value());
}

TEST_CASE("monoids by table and by bound") {
  const auto m = parse_model(R"({"schema_version": 1, "kind": "commutative_monoids",
                                 "objects": [{"name": "Z2", "table": [0, 1, 1, 0]}]})");
  REQUIRE(m->find("Z2").has_value());
  CHECK(m->carrier_size(*m->find("Z2")) == 2);
  const auto all = parse_model(R"({"schema_version": 1, "kind": "commutative_monoids",
                                   "max_size": 3})");
  CHECK(all->objects().size() == 1 + 2 + 5);
}

TEST_CASE("malformed model files") {
  for (const char* text : {
           "not json",
           R"({"kind": "pointed_sets", "objects": [2]})",
           R"({"schema_version": 2, "kind": "pointed_sets", "objects": [2]})",
           R"({"schema_version": 1, "kind": "groups", "objects": [2]})",
           R"({"schema_version": 1, "kind": "pointed_sets", "objects": [0]})",
           R"({"schema_version": 1, "kind": "commutative_monoids", "max_size": 5})",
           R"({"schema_version": 1, "kind": "commutative_monoids",
               "objects": [{"name": "B", "table": [0, 1, 1, 1, 2]}]})",
           R"({"schema_version": 1, "kind": "commutative_monoids",
               "objects": [{"name": "B", "table": [1, 0, 0, 1]}]})",
           R"({"schema_version": 1, "kind": "pointed_sets", "objects": [3],
               "overrides": [{"map": "lunit_sum", "args": ["P3"], "table": [0, 1, 1]}]})",
           R"({"schema_version": 1, "kind": "pointed_sets", "objects": [3],
               "overrides": [{"map": "frobnicate", "args": ["P3"], "table": [0, 1, 2]}]})",
           R"({"schema_version": 1, "kind": "pointed_sets", "objects": [3],
               "overrides": [{"map": "i", "args": ["P3"], "table": [0, 1, 2]}]})",
       }) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_model(text), ModelFileError);
  }
  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), ModelFileError);
}

TEST_CASE("overrides reach the model") {
  const auto m = parse_model(R"({"schema_version": 1, "kind": "pointed_sets", "objects": [2],
      "overrides": [{"map": "i", "args": ["P2", "P2"], "table": [0, 1, 2]}]})");
  const ObjId p2 = *m->find("P2");
  CHECK(m->has_overrides());
  CHECK(m->i(p2, p2).map == std::vector<int>{0, 1, 2});
}

TEST_CASE("composite object names") {
  const auto  m  = parse_model(R"({"schema_version": 1, "kind": "pointed_sets", "objects": [2, 3]})");
  const ObjId p2 = *m->find("P2"), p3 = *m->find("P3");
  CHECK(parse_object(*m, "P2") == p2);
  CHECK(parse_object(*m, "(P2+(P3*P2))") == m->sum(p2, m->prod(p3, p2)));
  CHECK(parse_object(*m, "(" + m->name(m->zero()) + "*P2)") == m->prod(m->zero(), p2));
  CHECK_FALSE(parse_object(*m, "P9").has_value());
  CHECK_FALSE(parse_object(*m, "(P2+").has_value());
  CHECK(parse_object(*m, m->name(m->prod(p3, m->sum(p2, p2)))) == m->prod(p3, m->sum(p2, p2)));
}

TEST_CASE("counterexample round trip") {
  const auto  m  = parse_model(R"({"schema_version": 1, "kind": "pointed_sets", "objects": [2, 3]})");
  const ObjId p2 = *m->find("P2"), p3 = *m->find("P3");
  Counterexample c{"sum.pentagon",
                   {{p2, m->sum(p3, p2)}, {m->hom(p2, p3).back()}, {"left", "1"}},
                   "a detail"};
  const auto back = counterexample_from_json(*m, counterexample_to_json(*m, c));
  CHECK(back.law == c.law);
  CHECK(back.instance.objects == c.instance.objects);
  CHECK(back.instance.morphisms == c.instance.morphisms);
  CHECK(back.instance.labels == c.instance.labels);
  CHECK(back.detail == c.detail);
  CHECK_THROWS_AS(counterexample_from_json(*m, R"({"law": "x", "objects": ["P7"]})"),
                  ModelFileError);
  CHECK_THROWS_AS(counterexample_from_json(
                      *m, R"({"law": "x", "morphisms": [{"dom": "P2", "cod": "P2", "map": [1, 0]}]})"),
                  ModelFileError);
}

TEST_CASE("shipped model files") {
  for (const char* name : {"pointed_sets.json", "commutative_monoids.json", "trivial.json"}) {
    const auto m = load_model(std::string(PLCAT_MODELS_DIR) + "/" + name);
    CHECK_FALSE(m->has_overrides());
    CHECK(all_passed(check_prelinear(*m)));
  }
  for (const char* name : {"pointed_sets_bad_unitor.json", "pointed_sets_bad_i.json",
                           "commutative_monoids_bad_i.json"}) {
    const auto m = load_model(std::string(PLCAT_MODELS_DIR) + "/" + name);
    CHECK(m->has_overrides());
    auto rs = check_structure(*m);
    for (auto& r : check_transformer(*m)) rs.push_back(r);
    for (auto& r : check_prelinear(*m)) rs.push_back(r);
    CHECK_FALSE(all_passed(rs));
  }
}
