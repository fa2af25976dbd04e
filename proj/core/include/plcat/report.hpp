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

// Outcomes of law checks.

#ifndef PLCAT_REPORT_HPP_
#define PLCAT_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plcat/model.hpp"

namespace plcat {

// A single instance of a law: the objects and morphisms it quantifies over,
// plus any further parameters in text form (words, bounds).
struct Instance {
  std::vector<ObjId>       objects;
  std::vector<Mor>         morphisms;
  std::vector<std::string> labels;
};

// A failing instance, with enough information to evaluate the law again.
struct Counterexample {
  std::string law;
  Instance    instance;
  std::string detail;
};

struct CheckReport {
  std::string                   law;
  bool                          passed    = true;
  std::size_t                   instances = 0;
  std::size_t                   failures  = 0;
  std::optional<Counterexample> counterexample;
  std::string                   note;
};

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace plcat

#endif  // PLCAT_REPORT_HPP_
