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

// Values of bounded-length paths of elementary canonical steps.
//
// canonical_between lists terms one by one, which stops being practical past
// a few steps.  Here a path is only remembered through its value: the vector
// of morphisms it evaluates to, one per object tuple.  Reach sets are grown a
// layer at a time, only propagating values that are new, and a path of
// length <= a + b is recovered by meeting a forward reach of radius a with a
// backward reach of radius b.

#ifndef PLCAT_REACH_HPP_
#define PLCAT_REACH_HPP_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "plcat/canon.hpp"
#include "plcat/model.hpp"

namespace plcat {

using ValueId = std::uint32_t;

// Interns value vectors over a fixed list of object tuples.  Not thread-safe.
class PathAlgebra {
 public:
  PathAlgebra(const Model& model, std::vector<std::vector<ObjId>> tuples, Mode mode);

  const Model&                           model() const noexcept { return model_; }
  const std::vector<std::vector<ObjId>>& tuples() const noexcept { return tuples_; }
  Mode                                   mode() const noexcept { return mode_; }

  ValueId identity(const Word& w);
  ValueId edge(const ElementaryTerm& e);
  ValueId term(const CanonTerm& t);
  // later o earlier
  ValueId compose(ValueId later, ValueId earlier);
  ValueId intern(std::vector<Mor> values);

  const std::vector<Mor>& values(ValueId id) const { return table_[id]; }
  std::size_t             size() const noexcept { return table_.size(); }
  std::size_t             edges_evaluated() const noexcept { return edges_.size(); }

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<Mor>& v) const noexcept;
  };
  struct EdgeHash {
    std::size_t operator()(const ElementaryTerm& e) const noexcept;
  };

  const Model&                                                 model_;
  std::vector<std::vector<ObjId>>                              tuples_;
  Mode                                                         mode_;
  std::vector<std::vector<Mor>>                                table_;
  std::unordered_map<std::vector<Mor>, ValueId, VecHash>       ids_;
  std::unordered_map<std::uint64_t, ValueId>                   composed_;
  std::unordered_map<ElementaryTerm, ValueId, EdgeHash>        edges_;
  std::unordered_map<Word, ValueId, WordHash>                  identities_;
};

// Sorted, duplicate-free.
using ValueSet = std::vector<ValueId>;

struct Reach {
  Word                                          anchor;
  std::size_t                                   radius = 0;
  bool                                          forward = true;
  // forward: values of paths anchor -> u; backward: values of paths u -> anchor.
  std::unordered_map<Word, ValueSet, WordHash> values;
  std::size_t                                   steps_expanded = 0;
};

Reach reach_forward(PathAlgebra& alg, const Word& source, std::size_t radius);
Reach reach_backward(PathAlgebra& alg, const Word& target, std::size_t radius);

// Values of every path source -> target whose length is at most
// forward.radius + backward.radius.
ValueSet meet(PathAlgebra& alg, const Reach& forward, const Reach& backward);

// Values of every path v -> w with at most `depth` steps.
ValueSet path_values(PathAlgebra& alg, const Word& v, const Word& w, std::size_t depth);

}  // namespace plcat

#endif  // PLCAT_REACH_HPP_
