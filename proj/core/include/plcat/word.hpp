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

// Words over two monoidal structures: the sum (written "+", unit "0") and
// the product (written "*", unit "1").  A word is a binary tree whose leaves
// are holes "_" or units; its length is the number of holes.
//
// Text form:  w ::= "_" | "0" | "1" | "(" w "+" w ")" | "(" w "*" w ")"

#ifndef PLCAT_WORD_HPP_
#define PLCAT_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plcat {

enum class Op : std::uint8_t { Sum, Prod };
enum class Side : std::uint8_t { Left, Right };

char        op_symbol(Op op);
std::string side_name(Side side);

class Word {
 public:
  enum class Kind : std::uint8_t { Hole, UnitZero, UnitOne, Sum, Prod };

  // Default-constructed word is a hole.
  Word();

  static Word hole();
  static Word zero();
  static Word one();
  static Word unit(Op op) { return op == Op::Sum ? zero() : one(); }
  static Word sum(Word left, Word right);
  static Word prod(Word left, Word right);
  static Word binary(Op op, Word left, Word right);

  Kind kind() const noexcept;
  bool is_leaf() const noexcept;
  bool is_binary() const noexcept { return !is_leaf(); }
  // Only valid on binary words.
  Op          op() const;
  const Word& left() const;
  const Word& right() const;
  const Word& child(Side side) const { return side == Side::Left ? left() : right(); }

  // Number of holes.
  std::size_t length() const noexcept;
  // Number of tree nodes.
  std::size_t size() const noexcept;
  // Number of unit leaves.
  std::size_t units() const noexcept;
  std::size_t hash() const noexcept;

  bool is_unit_free() const noexcept { return units() == 0; }

  // Subword at a preorder node index (0 is the root).
  const Word& at(std::size_t position) const;
  // Copy of this word with the subword at `position` replaced.
  Word replace_at(std::size_t position, const Word& replacement) const;

  friend bool operator==(const Word& a, const Word& b) noexcept;
  // Structural order: by size, then kind, then children.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  struct Node;
  explicit Word(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return w.hash(); }
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Word        parse_word(std::string_view text);
std::string render_word(const Word& w);
// Constructor-style rendering, e.g. "Sum(Hole, UnitZero)".
std::string render_tree(const Word& w);

inline std::size_t length(const Word& w) { return w.length(); }
inline bool        is_unit_free(const Word& w) { return w.is_unit_free(); }

// One unit-attachment step: `w` becomes `unit_word op w` (left) or
// `w op unit_word` (right).
struct Attachment {
  Op   op;
  Word unit_word;
  Side side;

  Word apply(const Word& w) const;
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

std::string render_attachment(const Attachment& a);

// Attachments listed innermost first: folding them over "_" rebuilds the word.
std::vector<Attachment> attachment_sequence(const Word& w);

struct CoreSplit {
  Word                    w1;
  Op                      op;
  Word                    w2;
  std::vector<Attachment> attachments;  // innermost first

  Word core() const { return Word::binary(op, w1, w2); }
  Word rebuild() const;
};

CoreSplit core_split(const Word& w);

// The unit-free core of a word of length <= 2: "_", "(_+_)" or "(_*_)".
// Words of length 0 have no core; this throws for them.
Word unit_free_core(const Word& w);

// All words with exactly `holes` holes and at most `max_units` unit leaves,
// in structural order.
std::vector<Word> enumerate_words(std::size_t holes, std::size_t max_units);
// All words with at most `max_nodes` tree nodes, in structural order.
std::vector<Word> enumerate_words_by_size(std::size_t max_nodes);

// Pure sum (or product) words of length n: every bracketing of n holes.
std::vector<Word> bracketings(Op op, std::size_t n);
// Right-nested bracketing X1 op (X2 op (... op Xn)).  n == 0 gives the unit.
Word right_nested(Op op, std::size_t n);
bool is_pure(const Word& w, Op op);

}  // namespace plcat

#endif  // PLCAT_WORD_HPP_
