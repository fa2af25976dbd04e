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

// JSON model files and counterexample documents.
//
//   {
//     "schema_version": 1,
//     "kind": "pointed_sets",
//     "objects": [1, 2, 3],                  // carrier sizes, or
//     "max_size": 3,                         // every size 1..max_size
//     "overrides": [
//       {"map": "lunit_sum", "args": ["P3"], "table": [0, 2, 1]}
//     ]
//   }
//
// For "commutative_monoids" the objects are {"name": ..., "table": [...]}
// with a row-major Cayley table and identity 0; "max_size" instead takes one
// monoid of each isomorphism type.  Override maps are assoc_sum, lunit_sum,
// runit_sum, assoc_prod, lunit_prod, runit_prod and i; arguments are base
// object names.

#ifndef PLCAT_MODEL_FILE_HPP_
#define PLCAT_MODEL_FILE_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "plcat/model.hpp"
#include "plcat/report.hpp"

namespace plcat {

inline constexpr int kSchemaVersion = 1;

class ModelFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::unique_ptr<Model> parse_model(std::string_view text);
std::unique_ptr<Model> load_model(const std::filesystem::path& path);

// Object from its rendered name, e.g. "(P2+(P3*P2))".
std::optional<ObjId> parse_object(const Model& m, std::string_view text);

// {"law": ..., "objects": [names], "morphisms": [{"dom", "cod", "map"}],
//  "labels": [...], "detail": ...}
std::string    counterexample_to_json(const Model& m, const Counterexample& c);
Counterexample counterexample_from_json(const Model& m, std::string_view text);

}  // namespace plcat

#endif  // PLCAT_MODEL_FILE_HPP_
