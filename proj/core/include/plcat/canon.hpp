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

// Canonical morphism terms between words.
//
// A term is built from generators (associators, unitors, the transformation
// i : x+y -> x*y, the map j : 0 -> 1 and identities), closed under vertical
// composition and parallel sum/product.  Terms are immutable values with
// cached source and target words.
//
// Text form (prefix):
//
//   term ::= gen | "comp(" term "," term ")"
//          | "par+(" term "," term ")" | "par*(" term "," term ")"
//   gen  ::= name ["^-1"] ["(" word { "," word } ")"]
//   name ::= "assoc+" | "lunit+" | "runit+" | "assoc*" | "lunit*" | "runit*"
//          | "i" | "j" | "id"
//
// comp(a, b) is "a after b".  Generator arguments are omitted when they are
// all "_".

#ifndef PLCAT_CANON_HPP_
#define PLCAT_CANON_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plcat/word.hpp"

namespace plcat {

// Which generators count as invertible.  In prelinear mode only the
// structural isomorphisms are; partially linear mode adds i.
enum class Mode { Prelinear, PartiallyLinear };

std::string mode_name(Mode mode);
Mode        parse_mode(std::string_view text);

enum class GenKind {
  AssocSum,
  LunitSum,
  RunitSum,
  AssocProd,
  LunitProd,
  RunitProd,
  I,
  J,
  Identity,
};

std::size_t generator_arity(GenKind kind);
std::string generator_name(GenKind kind);

struct Generator {
  GenKind           kind    = GenKind::Identity;
  bool              inverse = false;
  std::vector<Word> args;

  Word source() const;
  Word target() const;
  // Number of holes covered by the arguments (== length of source/target).
  std::size_t length() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Throws PreconditionError when the argument count or direction is invalid.
Generator make_generator(GenKind kind, bool inverse, std::vector<Word> args);

// Generators that may appear with the inverse flag in `mode`.
bool has_inverse_form(GenKind kind, Mode mode);

class CanonTerm {
 public:
  enum class Kind { Gen, VComp, SumPar, ProdPar };

  static CanonTerm gen(Generator g);
  static CanonTerm gen(GenKind kind, std::vector<Word> args = {});
  static CanonTerm identity(Word w);

  Kind             kind() const noexcept;
  const Generator& generator() const;  // Gen only
  // For VComp: first() is the later morphism, second() the earlier one.
  // For SumPar/ProdPar: first() is the left factor.
  const CanonTerm& first() const;
  const CanonTerm& second() const;

  const Word& source() const noexcept;
  const Word& target() const noexcept;

  bool is_identity() const noexcept;
  // Number of term nodes.
  std::size_t size() const noexcept;

  friend bool operator==(const CanonTerm& a, const CanonTerm& b) noexcept;

 private:
  struct Node;
  explicit CanonTerm(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;

  friend CanonTerm vcompose(const CanonTerm&, const CanonTerm&);
  friend CanonTerm sum_par(const CanonTerm&, const CanonTerm&);
  friend CanonTerm prod_par(const CanonTerm&, const CanonTerm&);
};

class BoundaryMismatch : public std::invalid_argument {
 public:
  BoundaryMismatch(const Word& expected, const Word& found);
};

// later o earlier; throws BoundaryMismatch unless source(later) == target(earlier).
CanonTerm vcompose(const CanonTerm& later, const CanonTerm& earlier);
CanonTerm sum_par(const CanonTerm& left, const CanonTerm& right);
CanonTerm prod_par(const CanonTerm& left, const CanonTerm& right);
CanonTerm par(Op op, const CanonTerm& left, const CanonTerm& right);
// Composite of `steps` applied first-to-last; an empty list is rejected.
CanonTerm compose_chain(const std::vector<CanonTerm>& steps);

std::string render_term(const CanonTerm& t);
CanonTerm   parse_term(std::string_view text);
// Strict total order on terms by their text form; used to sort result lists.
bool term_less(const CanonTerm& a, const CanonTerm& b);

// A single generator placed at one node of a word: w(beta).
struct ElementaryTerm {
  Word        context;   // the full source word
  std::size_t position;  // preorder index of the generator's source in context
  Generator   inner;

  Word      source() const { return context; }
  Word      target() const { return context.replace_at(position, inner.target()); }
  CanonTerm to_term() const;

  friend bool operator==(const ElementaryTerm&, const ElementaryTerm&) = default;
};

// Factors a term as e_1 then e_2 ... then e_k.  Identity steps are dropped;
// a pure identity factors as a single identity step.
std::vector<ElementaryTerm> elementary_factorization(const CanonTerm& t);

// Every non-identity elementary step leaving (or entering) `w` in `mode`.
// J is never inverted.  Order is deterministic.
std::vector<ElementaryTerm> elementary_moves_from(const Word& w, Mode mode);
std::vector<ElementaryTerm> elementary_moves_into(const Word& w, Mode mode);

// 1 -> 1+0 -> 1*0 -> 0, the composite rho+^-1, then i, then lunit*.
CanonTerm point_morphism();

// Canonical maps from a length-0 word onto a unit.
CanonTerm collapse_to_zero(const Word& w);
CanonTerm collapse_to_one(const Word& w);
CanonTerm collapse_to_unit(const Word& w, Op op);

// Unit cancellation for words of length <= 2.  For length 0 the target is
// the unit matching the word's outer shape (0 for "0" and sums, 1 for "1"
// and products); see length_zero_cancellations for both.
CanonTerm unit_cancel(const Word& w);

struct LengthZeroCancellations {
  CanonTerm to_zero;
  CanonTerm to_one;
};
LengthZeroCancellations length_zero_cancellations(const Word& w);

// Unit cancellation followed by i when the core is a sum, so the target is
// always "_", "(_*_)", or the unit "0" for length-0 words.
CanonTerm normalized_cancel(const Word& w);

class NotInvertible : public std::invalid_argument {
 public:
  NotInvertible(const Generator& g, Mode mode);
};

CanonTerm invert(const CanonTerm& t, Mode mode);

class SearchLimitExceeded : public std::runtime_error {
 public:
  explicit SearchLimitExceeded(std::size_t limit);
};

// Every term from v to w built from at most `depth` elementary steps,
// as left-nested composites of elementary terms; the identity is included
// when v == w.  Sorted by text form.  Throws SearchLimitExceeded when more
// than `limit` terms would be returned (limit 0 means unbounded).
std::vector<CanonTerm> canonical_between(const Word& v, const Word& w,
                                         std::size_t depth, Mode mode,
                                         std::size_t limit = 0);

// Words reachable from `w` by at most `radius` inverse steps, with the
// minimal number of steps needed to reach `w` from them.
struct DistanceBall;
std::shared_ptr<const DistanceBall> backward_ball(const Word& w, std::size_t radius,
                                                  Mode mode);
std::optional<std::size_t> distance_to_center(const DistanceBall& ball,
                                              const Word& u);

}  // namespace plcat

#endif  // PLCAT_CANON_HPP_
