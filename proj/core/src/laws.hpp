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

// Internal law table shared by the check suites.

#ifndef PLCAT_SRC_LAWS_HPP_
#define PLCAT_SRC_LAWS_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plcat/checks.hpp"

namespace plcat::detail {

using Verdict = std::optional<std::string>;
using Visit   = std::function<bool(const Instance&)>;  // false stops

struct LawContext {
  const Model& m;
  CheckOptions options;
};

struct Law {
  std::string                                            name;
  std::function<void(const LawContext&, const Visit&)>    instances;
  std::function<Verdict(const LawContext&, const Instance&)> check;
};

const std::vector<Law>& structure_laws();
const std::vector<Law>& transformer_laws();
const std::vector<Law>& prelinear_laws();
const std::vector<Law>& centrality_laws();
const std::vector<Law>& coherence_laws();
const std::vector<Law>& coherence_sweep_laws();

const Law*  find_law(std::string_view name);
CheckReport run(const Law& law, const LawContext& ctx);

// Helpers for law bodies.
std::vector<ObjId>           pool(const Model& m, std::size_t max_size);
// Every morphism between objects of the pool.
std::vector<Mor>             arrows(const Model& m, const std::vector<ObjId>& objects);
std::map<ObjId, std::vector<Mor>> arrows_by_domain(const std::vector<Mor>& all);
Verdict expect_equal(const Model& m, const Mor& lhs, const Mor& rhs, std::string_view what);

}  // namespace plcat::detail

#endif  // PLCAT_SRC_LAWS_HPP_
