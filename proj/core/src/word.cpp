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

#include "plcat/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace plcat {

char op_symbol(Op op) { return op == Op::Sum ? '+' : '*'; }

std::string side_name(Side side) { return side == Side::Left ? "left" : "right"; }

struct Word::Node {
  Kind        kind;
  Word        left;
  Word        right;
  std::size_t length;
  std::size_t size;
  std::size_t units;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Word::Word() : Word(hole()) {}

Word::Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Word Word::hole() {
  static const Word w{std::shared_ptr<const Node>(
      new Node{Kind::Hole, Word(nullptr), Word(nullptr), 1, 1, 0, 0x51})};
  return w;
}

Word Word::zero() {
  static const Word w{std::shared_ptr<const Node>(
      new Node{Kind::UnitZero, Word(nullptr), Word(nullptr), 0, 1, 1, 0x52})};
  return w;
}

Word Word::one() {
  static const Word w{std::shared_ptr<const Node>(
      new Node{Kind::UnitOne, Word(nullptr), Word(nullptr), 0, 1, 1, 0x53})};
  return w;
}

Word Word::binary(Op op, Word left, Word right) {
  const Kind  kind = op == Op::Sum ? Kind::Sum : Kind::Prod;
  std::size_t h    = mix(mix(static_cast<std::size_t>(kind) + 0x60, left.hash()),
                         right.hash());
  auto node        = std::make_shared<Node>(
      Node{kind, left, right, left.length() + right.length(),
           left.size() + right.size() + 1, left.units() + right.units(), h});
  return Word(std::move(node));
}

Word Word::sum(Word left, Word right) {
  return binary(Op::Sum, std::move(left), std::move(right));
}

Word Word::prod(Word left, Word right) {
  return binary(Op::Prod, std::move(left), std::move(right));
}

Word::Kind Word::kind() const noexcept { return node_->kind; }

bool Word::is_leaf() const noexcept {
  return node_->kind != Kind::Sum && node_->kind != Kind::Prod;
}

Op Word::op() const {
  if (is_leaf()) throw std::logic_error("Word::op on a leaf");
  return node_->kind == Kind::Sum ? Op::Sum : Op::Prod;
}

const Word& Word::left() const {
  if (is_leaf()) throw std::logic_error("Word::left on a leaf");
  return node_->left;
}

const Word& Word::right() const {
  if (is_leaf()) throw std::logic_error("Word::right on a leaf");
  return node_->right;
}

std::size_t Word::length() const noexcept { return node_->length; }
std::size_t Word::size() const noexcept { return node_->size; }
std::size_t Word::units() const noexcept { return node_->units; }
std::size_t Word::hash() const noexcept { return node_->hash; }

const Word& Word::at(std::size_t position) const {
  const Word* w = this;
  while (position != 0) {
    if (position >= w->size() || w->is_leaf())
      throw std::out_of_range("word position out of range");
    --position;
    const Word& l = w->left();
    if (position < l.size()) {
      w = &l;
    } else {
      position -= l.size();
      w = &w->right();
    }
  }
  return *w;
}

Word Word::replace_at(std::size_t position, const Word& replacement) const {
  if (position == 0) return replacement;
  if (position >= size() || is_leaf())
    throw std::out_of_range("word position out of range");
  const std::size_t p = position - 1;
  if (p < left().size())
    return binary(op(), left().replace_at(p, replacement), right());
  return binary(op(), left(), right().replace_at(p - left().size(), replacement));
}

bool operator==(const Word& a, const Word& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind())
    return false;
  if (a.is_leaf()) return true;
  return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is_leaf()) return std::strong_ordering::equal;
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

SyntaxError::SyntaxError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)),
      offset_(offset) {}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse_all() {
    Word w = parse();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return w;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  Word parse() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = text_[pos_];
    switch (c) {
      case '_': ++pos_; return Word::hole();
      case '0': ++pos_; return Word::zero();
      case '1': ++pos_; return Word::one();
      case '(': {
        ++pos_;
        Word left = parse();
        skip_space();
        if (pos_ >= text_.size())
          throw SyntaxError("unexpected end of input, expected '+' or '*'", pos_);
        Op op;
        if (text_[pos_] == '+') {
          op = Op::Sum;
        } else if (text_[pos_] == '*') {
          op = Op::Prod;
        } else {
          throw SyntaxError(std::string("expected '+' or '*', found '") +
                                text_[pos_] + "'",
                            pos_);
        }
        ++pos_;
        Word right = parse();
        skip_space();
        if (pos_ >= text_.size())
          throw SyntaxError("unexpected end of input, expected ')'", pos_);
        if (text_[pos_] != ')')
          throw SyntaxError(std::string("expected ')', found '") + text_[pos_] + "'",
                            pos_);
        ++pos_;
        return Word::binary(op, std::move(left), std::move(right));
      }
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }
  }

  std::string_view text_;
  std::size_t      pos_ = 0;
};

void render_into(const Word& w, std::string& out) {
  switch (w.kind()) {
    case Word::Kind::Hole: out += '_'; return;
    case Word::Kind::UnitZero: out += '0'; return;
    case Word::Kind::UnitOne: out += '1'; return;
    default:
      out += '(';
      render_into(w.left(), out);
      out += op_symbol(w.op());
      render_into(w.right(), out);
      out += ')';
  }
}

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse_all(); }

std::string render_word(const Word& w) {
  std::string out;
  out.reserve(w.size() * 2);
  render_into(w, out);
  return out;
}

std::string render_tree(const Word& w) {
  switch (w.kind()) {
    case Word::Kind::Hole: return "Hole";
    case Word::Kind::UnitZero: return "UnitZero";
    case Word::Kind::UnitOne: return "UnitOne";
    case Word::Kind::Sum:
      return "Sum(" + render_tree(w.left()) + ", " + render_tree(w.right()) + ")";
    case Word::Kind::Prod:
      return "Prod(" + render_tree(w.left()) + ", " + render_tree(w.right()) + ")";
  }
  return {};
}

Word Attachment::apply(const Word& w) const {
  return side == Side::Left ? Word::binary(op, unit_word, w)
                            : Word::binary(op, w, unit_word);
}

std::string render_attachment(const Attachment& a) {
  return std::string("(") + op_symbol(a.op) + "," + render_word(a.unit_word) + "," +
         side_name(a.side) + ")";
}

namespace {

// Peels root attachments off `w` until reaching a node where the unit-free
// part can no longer be separated by a length-0 sibling.  Returned list is
// root-first.
std::vector<Attachment> peel(const Word*& w) {
  std::vector<Attachment> outer;
  while (w->is_binary()) {
    if (w->left().length() == 0) {
      outer.push_back({w->op(), w->left(), Side::Left});
      w = &w->right();
    } else if (w->right().length() == 0) {
      outer.push_back({w->op(), w->right(), Side::Right});
      w = &w->left();
    } else {
      break;
    }
  }
  return outer;
}

}  // namespace

std::vector<Attachment> attachment_sequence(const Word& w) {
  if (w.length() != 1)
    throw PreconditionError("attachment_sequence requires a word of length 1, got " +
                            std::to_string(w.length()) + " for " + render_word(w));
  const Word* cur   = &w;
  auto        outer = peel(cur);
  std::reverse(outer.begin(), outer.end());
  return outer;
}

Word CoreSplit::rebuild() const {
  Word w = core();
  for (const auto& a : attachments) w = a.apply(w);
  return w;
}

CoreSplit core_split(const Word& w) {
  if (w.length() != 2)
    throw PreconditionError("core_split requires a word of length 2, got " +
                            std::to_string(w.length()) + " for " + render_word(w));
  const Word* cur   = &w;
  auto        outer = peel(cur);
  std::reverse(outer.begin(), outer.end());
  return CoreSplit{cur->left(), cur->op(), cur->right(), std::move(outer)};
}

Word unit_free_core(const Word& w) {
  switch (w.length()) {
    case 1: return Word::hole();
    case 2: {
      auto split = core_split(w);
      return Word::binary(split.op, Word::hole(), Word::hole());
    }
    default:
      throw PreconditionError("unit-free core is defined for lengths 1 and 2, got " +
                              std::to_string(w.length()));
  }
}

namespace {

using WordTable = std::map<std::pair<std::size_t, std::size_t>, std::vector<Word>>;

const std::vector<Word>& words_exact(std::size_t holes, std::size_t units,
                                     WordTable& memo) {
  auto key = std::make_pair(holes, units);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<Word> out;
  if (holes + units == 1) {
    if (holes == 1) {
      out.push_back(Word::hole());
    } else {
      out.push_back(Word::zero());
      out.push_back(Word::one());
    }
  } else if (holes + units > 1) {
    for (std::size_t h1 = 0; h1 <= holes; ++h1) {
      for (std::size_t u1 = 0; u1 <= units; ++u1) {
        const std::size_t left_leaves  = h1 + u1;
        const std::size_t right_leaves = holes - h1 + units - u1;
        if (left_leaves == 0 || right_leaves == 0) continue;
        const auto lefts  = words_exact(h1, u1, memo);
        const auto rights = words_exact(holes - h1, units - u1, memo);
        for (const auto& l : lefts)
          for (const auto& r : rights)
            for (Op op : {Op::Sum, Op::Prod}) out.push_back(Word::binary(op, l, r));
      }
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::vector<Word> enumerate_words(std::size_t holes, std::size_t max_units) {
  WordTable         memo;
  std::vector<Word> out;
  for (std::size_t u = 0; u <= max_units; ++u) {
    const auto& part = words_exact(holes, u, memo);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> enumerate_words_by_size(std::size_t max_nodes) {
  WordTable         memo;
  std::vector<Word> out;
  const std::size_t max_leaves = (max_nodes + 1) / 2;
  for (std::size_t leaves = 1; leaves <= max_leaves; ++leaves)
    for (std::size_t h = 0; h <= leaves; ++h) {
      const auto& part = words_exact(h, leaves - h, memo);
      out.insert(out.end(), part.begin(), part.end());
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> bracketings(Op op, std::size_t n) {
  if (n == 0) return {Word::unit(op)};
  if (n == 1) return {Word::hole()};
  std::vector<Word> out;
  for (std::size_t k = 1; k < n; ++k)
    for (const auto& l : bracketings(op, k))
      for (const auto& r : bracketings(op, n - k)) out.push_back(Word::binary(op, l, r));
  std::sort(out.begin(), out.end());
  return out;
}

Word right_nested(Op op, std::size_t n) {
  if (n == 0) return Word::unit(op);
  Word w = Word::hole();
  for (std::size_t k = 1; k < n; ++k) w = Word::binary(op, Word::hole(), w);
  return w;
}

bool is_pure(const Word& w, Op op) {
  switch (w.kind()) {
    case Word::Kind::Hole: return true;
    case Word::Kind::UnitZero: return op == Op::Sum;
    case Word::Kind::UnitOne: return op == Op::Prod;
    default: return w.op() == op && is_pure(w.left(), op) && is_pure(w.right(), op);
  }
}

}  // namespace plcat
