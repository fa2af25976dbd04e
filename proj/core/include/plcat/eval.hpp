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

// Interpretation of words and canonical terms in a Model.

#ifndef PLCAT_EVAL_HPP_
#define PLCAT_EVAL_HPP_

#include <span>
#include <stdexcept>
#include <vector>

#include "plcat/canon.hpp"
#include "plcat/model.hpp"
#include "plcat/word.hpp"

namespace plcat {

class ArityMismatch : public std::invalid_argument {
 public:
  ArityMismatch(const Word& w, std::size_t given);
};

// w with its i-th hole replaced by objects[i].
ObjId eval_object(const Model& m, const Word& w, std::span<const ObjId> objects);
// The functorial action of w on a tuple of morphisms.
Mor eval_morphism(const Model& m, const Word& w, std::span<const Mor> morphisms);

// Generators go to structure components; J goes to the map 0 -> 1.  Throws
// IntegrityError if an inverse of i is requested and i is not invertible.
Mor eval_canon(const Model& m, const CanonTerm& t, std::span<const ObjId> objects);
Mor eval_elementary(const Model& m, const ElementaryTerm& e,
                    std::span<const ObjId> objects);
Mor eval_generator(const Model& m, const Generator& g, std::span<const ObjId> objects);

// Inclusion of the index-th summand into a pure sum word (0-based), and
// dually the projection out of a pure product word.
Mor inclusion(const Model& m, const Word& w, std::span<const ObjId> objects,
              std::size_t index);
Mor projection(const Model& m, const Word& w, std::span<const ObjId> objects,
               std::size_t index);

// X -> 1 -> 0 -> Y, the middle arrow being the point morphism.
Mor zero_morphism(const Model& m, ObjId x, ObjId y);

// Every tuple of `arity` base objects whose carriers have at most
// `max_size` elements, in lexicographic order.
std::vector<std::vector<ObjId>> object_tuples(const Model& m, std::size_t arity,
                                              std::size_t max_size);

}  // namespace plcat

#endif  // PLCAT_EVAL_HPP_
