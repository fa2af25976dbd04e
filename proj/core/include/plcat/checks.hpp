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

// Exhaustive law verification over the base objects of a finite model.
//
// Each law has a name, an instance enumerator and a predicate.  A failing
// report keeps its first failing instance, and replay() evaluates the named
// law at exactly that instance again.

#ifndef PLCAT_CHECKS_HPP_
#define PLCAT_CHECKS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plcat/model.hpp"
#include "plcat/report.hpp"

namespace plcat {

// Binary operation on parallel morphisms.
using Addition = std::function<Mor(const Model&, const Mor&, const Mor&)>;

struct CheckOptions {
  // Base objects with larger carriers are skipped.
  std::size_t max_size = 3;
  // Bound for the objects of the 3-fold joint epi/mono checks.
  std::size_t triple_max_size = 2;
  // Addition used by the monoid and distributivity laws; empty means
  // add_central.
  Addition addition;
};

std::vector<CheckReport> check_structure(const Model& m, const CheckOptions& options = {});
std::vector<CheckReport> check_transformer(const Model& m, const CheckOptions& options = {});
std::vector<CheckReport> check_prelinear(const Model& m, const CheckOptions& options = {});

struct LineariserResult {
  bool                               value = true;
  std::optional<std::pair<ObjId, ObjId>> witness;
  std::string                        reason;
  // (A, B, inverse of i_{A,B}) for every pair checked, when value is true.
  std::vector<std::tuple<ObjId, ObjId, Mor>> inverses;
};

LineariserResult is_lineariser(const Model& m, std::size_t max_size = 3);

std::vector<std::string> law_names();
bool                     is_law(const std::string& name);

// Evaluates the counterexample's law at its instance.  Returns the violation,
// or nothing when the law holds there.  Throws PreconditionError for an
// unknown law.
std::optional<std::string> replay(const Model& m, const Counterexample& c,
                                  const CheckOptions& options = {});

// Runs one named law over all its instances.
CheckReport run_law(const Model& m, const std::string& name,
                    const CheckOptions& options = {});

}  // namespace plcat

#endif  // PLCAT_CHECKS_HPP_
