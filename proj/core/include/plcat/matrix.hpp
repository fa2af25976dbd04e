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

// Matrix presentations of morphisms from an n-fold sum to an m-fold product.
//
// Entry (k, l) of the presentation of f is  pi_k o f o iota_l.  A matrix need
// not present any morphism; when one does it is unique, since the inclusions
// are jointly epimorphic and the projections jointly monomorphic.

#ifndef PLCAT_MATRIX_HPP_
#define PLCAT_MATRIX_HPP_

#include <optional>
#include <string>
#include <vector>

#include "plcat/canon.hpp"
#include "plcat/model.hpp"
#include "plcat/report.hpp"

namespace plcat {

struct MatrixPresentation {
  Word                          source_word;  // pure sum word of length cols()
  std::vector<ObjId>            source_objects;
  Word                          target_word;  // pure product word of length rows()
  std::vector<ObjId>            target_objects;
  std::vector<std::vector<Mor>> entries;      // entries[k][l] : source l -> target k

  std::size_t rows() const noexcept { return target_objects.size(); }
  std::size_t cols() const noexcept { return source_objects.size(); }

  friend bool operator==(const MatrixPresentation&, const MatrixPresentation&) = default;
};

// Builds the presentation shape and checks entry types.
MatrixPresentation make_matrix(const Model& m, Word source_word,
                               std::vector<ObjId> source_objects, Word target_word,
                               std::vector<ObjId> target_objects,
                               std::vector<std::vector<Mor>> entries);

MatrixPresentation matrix_of(const Model& m, const Mor& f, const Word& source_word,
                             const std::vector<ObjId>& source_objects,
                             const Word& target_word,
                             const std::vector<ObjId>& target_objects);

// Exhaustive search of hom(source, target).  Throws IntegrityError if two
// distinct morphisms present the same matrix.
std::optional<Mor> realize(const Model& m, const MatrixPresentation& p);

// Square identity: 1 on the diagonal, zero morphisms elsewhere.  Default
// words are right-nested.
MatrixPresentation identity_matrix(const Model& m, const std::vector<ObjId>& objects,
                                   std::optional<Word> source_word = std::nullopt,
                                   std::optional<Word> target_word = std::nullopt);

// Renders entries as an aligned grid of tables.
std::string render_matrix(const Model& m, const MatrixPresentation& p);

struct CoherenceOptions {
  std::size_t depth         = 6;
  std::size_t max_tuple_size = 2;  // carriers of the objects in the tuples
  Mode        mode          = Mode::Prelinear;
};

// For every bracketing v of an n-fold sum and w of an n-fold product: every
// canonical path v -> w with at most `depth` steps has the same value at each
// object tuple, and that value presents the identity matrix.
CheckReport coherence_identity_check(const Model& m, std::size_t n,
                                     const CoherenceOptions& options = {});

}  // namespace plcat

#endif  // PLCAT_MATRIX_HPP_
