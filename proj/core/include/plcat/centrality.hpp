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

// Cover relations, central morphisms and their addition.
//
// f : X -> Y is central when f covers 1_Y for the sum (some h : X+Y -> Y
// restricts to f and 1_Y) and f co-covers 1_X for the product (some
// h : X -> Y*X projects to f and 1_X).  Equivalently the matrix
//
//   [ 1_Y  f  ]
//   [ z    1_X]
//
// from Y+X to Y*X is realized.  With an invertible i, the sum of central f
// and g is read off the composite  M_g o i^-1 o M_f.

#ifndef PLCAT_CENTRALITY_HPP_
#define PLCAT_CENTRALITY_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plcat/checks.hpp"
#include "plcat/matrix.hpp"
#include "plcat/model.hpp"

namespace plcat {

// h with h o iota_1 = f and h o iota_2 = g (sum), or pi_1 o h = f and
// pi_2 o h = g (product).
struct CoverWitness {
  Mor f, g, h;
};

// Raised by the addition when the model's i has a non-invertible component.
class LineariserRequired : public std::runtime_error {
 public:
  explicit LineariserRequired(const std::string& reason);
};

std::optional<CoverWitness> covers_sum(const Model& m, const Mor& f, const Mor& g);
std::optional<CoverWitness> covers_prod(const Model& m, const Mor& f, const Mor& g);

struct Centrality {
  bool                        central = false;
  std::optional<CoverWitness> sum_witness;   // f covers 1_Y
  std::optional<CoverWitness> prod_witness;  // f co-covers 1_X
};

Centrality is_central(const Model& m, const Mor& f);

// [[1_Y, f], [z_{Y,X}, 1_X]] from (_+_) at (Y, X) to (_*_) at (Y, X).
MatrixPresentation central_matrix(const Model& m, const Mor& f);
bool               is_central_matrix(const Model& m, const Mor& f);

// Z(X, Y) in hom order.
std::vector<Mor> central_hom(const Model& m, ObjId x, ObjId y);

// Throws LineariserRequired, PreconditionError if f or g is not central or
// they are not parallel, and IntegrityError if the composite does not have
// the expected shape.
Mor add_central(const Model& m, const Mor& f, const Mor& g);

// add_central, except that f + g returns `result`.
Addition corrupted_addition(Mor f, Mor g, Mor result);

struct CentralMonoid {
  ObjId                                 x = 0, y = 0;
  std::vector<Mor>                      elements;  // Z(X, Y)
  std::vector<std::vector<std::size_t>> table;     // indices into elements
  std::size_t                           unit = 0;  // index of z
  bool                                  commutative = true;
};

// Throws LineariserRequired when the addition is undefined, and
// IntegrityError when the sum of two elements is not central.
CentralMonoid central_monoid(const Model& m, ObjId x, ObjId y, const Addition& add = {});

std::string render_addition_table(const Model& m, const CentralMonoid& z);

// Closure, associativity, unit and codiagonal laws over every Z(X, Y).
std::vector<CheckReport> check_monoid_laws(const Model& m, const CheckOptions& options = {});
// h(f+g) = hf+hg and (f+g)h = fh+gh over central composable triples.
std::vector<CheckReport> check_distributivity(const Model& m,
                                              const CheckOptions& options = {});
// is_central agrees with is_central_matrix; zero morphisms are central.
std::vector<CheckReport> check_centrality(const Model& m, const CheckOptions& options = {});

struct LinearityReport {
  bool        lineariser           = false;  // every i_{A,B} invertible
  bool        matrices_realizable  = false;  // every 2x2 matrix has a realizer
  bool        addition_definable   = false;
  bool        monoids_distributive = false;  // every Z(X,Y) a monoid, composition distributes
  std::string lineariser_reason;
  std::vector<CheckReport> details;
  CheckReport              report;  // "linearity.theorem": L iff R on this model

  bool left() const { return lineariser && matrices_realizable; }
  bool right() const { return addition_definable && monoids_distributive; }
};

LinearityReport check_linearity_theorem(const Model& m, const CheckOptions& options = {});

}  // namespace plcat

#endif  // PLCAT_CENTRALITY_HPP_
