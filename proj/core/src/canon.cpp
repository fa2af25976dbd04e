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

#include "plcat/canon.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <functional>
#include <unordered_map>
#include <utility>

namespace plcat {

std::string mode_name(Mode mode) {
  return mode == Mode::Prelinear ? "prelinear" : "partially-linear";
}

Mode parse_mode(std::string_view text) {
  if (text == "prelinear") return Mode::Prelinear;
  if (text == "partially-linear" || text == "partially_linear")
    return Mode::PartiallyLinear;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

std::size_t generator_arity(GenKind kind) {
  switch (kind) {
    case GenKind::AssocSum:
    case GenKind::AssocProd: return 3;
    case GenKind::I: return 2;
    case GenKind::J: return 0;
    default: return 1;
  }
}

std::string generator_name(GenKind kind) {
  switch (kind) {
    case GenKind::AssocSum: return "assoc+";
    case GenKind::LunitSum: return "lunit+";
    case GenKind::RunitSum: return "runit+";
    case GenKind::AssocProd: return "assoc*";
    case GenKind::LunitProd: return "lunit*";
    case GenKind::RunitProd: return "runit*";
    case GenKind::I: return "i";
    case GenKind::J: return "j";
    case GenKind::Identity: return "id";
  }
  return "?";
}

namespace {

constexpr std::array kAllKinds = {
    GenKind::AssocSum,  GenKind::LunitSum,  GenKind::RunitSum,
    GenKind::AssocProd, GenKind::LunitProd, GenKind::RunitProd,
    GenKind::I,         GenKind::J,         GenKind::Identity,
};

bool is_structural(GenKind kind) {
  return kind != GenKind::I && kind != GenKind::J && kind != GenKind::Identity;
}

Op kind_op(GenKind kind) {
  switch (kind) {
    case GenKind::AssocProd:
    case GenKind::LunitProd:
    case GenKind::RunitProd: return Op::Prod;
    default: return Op::Sum;
  }
}

// Schema of the forward generator.  `from_source` selects which side.
Word instantiate(GenKind kind, bool from_source, const std::vector<Word>& a) {
  switch (kind) {
    case GenKind::AssocSum:
    case GenKind::AssocProd: {
      const Op op = kind_op(kind);
      return from_source ? Word::binary(op, a[0], Word::binary(op, a[1], a[2]))
                         : Word::binary(op, Word::binary(op, a[0], a[1]), a[2]);
    }
    case GenKind::LunitSum:
    case GenKind::LunitProd: {
      const Op op = kind_op(kind);
      return from_source ? Word::binary(op, Word::unit(op), a[0]) : a[0];
    }
    case GenKind::RunitSum:
    case GenKind::RunitProd: {
      const Op op = kind_op(kind);
      return from_source ? Word::binary(op, a[0], Word::unit(op)) : a[0];
    }
    case GenKind::I:
      return from_source ? Word::sum(a[0], a[1]) : Word::prod(a[0], a[1]);
    case GenKind::J: return from_source ? Word::zero() : Word::one();
    case GenKind::Identity: return a[0];
  }
  return Word::hole();
}

// Inverse of instantiate: the arguments making the schema equal to `s`.
std::optional<std::vector<Word>> match(GenKind kind, bool from_source, const Word& s) {
  switch (kind) {
    case GenKind::AssocSum:
    case GenKind::AssocProd: {
      const Op op = kind_op(kind);
      if (!s.is_binary() || s.op() != op) return std::nullopt;
      if (from_source) {
        const Word& r = s.right();
        if (!r.is_binary() || r.op() != op) return std::nullopt;
        return std::vector<Word>{s.left(), r.left(), r.right()};
      }
      const Word& l = s.left();
      if (!l.is_binary() || l.op() != op) return std::nullopt;
      return std::vector<Word>{l.left(), l.right(), s.right()};
    }
    case GenKind::LunitSum:
    case GenKind::LunitProd: {
      if (!from_source) return std::vector<Word>{s};
      const Op op = kind_op(kind);
      if (!s.is_binary() || s.op() != op || s.left() != Word::unit(op))
        return std::nullopt;
      return std::vector<Word>{s.right()};
    }
    case GenKind::RunitSum:
    case GenKind::RunitProd: {
      if (!from_source) return std::vector<Word>{s};
      const Op op = kind_op(kind);
      if (!s.is_binary() || s.op() != op || s.right() != Word::unit(op))
        return std::nullopt;
      return std::vector<Word>{s.left()};
    }
    case GenKind::I: {
      const Op op = from_source ? Op::Sum : Op::Prod;
      if (!s.is_binary() || s.op() != op) return std::nullopt;
      return std::vector<Word>{s.left(), s.right()};
    }
    case GenKind::J: {
      if (s.kind() != (from_source ? Word::Kind::UnitZero : Word::Kind::UnitOne))
        return std::nullopt;
      return std::vector<Word>{};
    }
    case GenKind::Identity: return std::vector<Word>{s};
  }
  return std::nullopt;
}

}  // namespace

Word Generator::source() const { return instantiate(kind, !inverse, args); }
Word Generator::target() const { return instantiate(kind, inverse, args); }

std::size_t Generator::length() const {
  std::size_t n = 0;
  for (const auto& a : args) n += a.length();
  return n;
}

Generator make_generator(GenKind kind, bool inverse, std::vector<Word> args) {
  if (args.size() != generator_arity(kind))
    throw PreconditionError("generator " + generator_name(kind) + " takes " +
                            std::to_string(generator_arity(kind)) + " arguments, got " +
                            std::to_string(args.size()));
  if (inverse && (kind == GenKind::J || kind == GenKind::Identity))
    throw PreconditionError("generator " + generator_name(kind) +
                            " has no inverse form");
  return Generator{kind, inverse, std::move(args)};
}

bool has_inverse_form(GenKind kind, Mode mode) {
  if (is_structural(kind)) return true;
  return kind == GenKind::I && mode == Mode::PartiallyLinear;
}

// ---------------------------------------------------------------------------
// CanonTerm

struct CanonTerm::Node {
  Kind                     kind;
  Generator                gen;
  std::optional<CanonTerm> a;
  std::optional<CanonTerm> b;
  Word                     source;
  Word                     target;
  std::size_t              size;
};

CanonTerm::CanonTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

CanonTerm CanonTerm::gen(Generator g) {
  Word s = g.source();
  Word t = g.target();
  return CanonTerm(std::make_shared<Node>(
      Node{Kind::Gen, std::move(g), std::nullopt, std::nullopt, std::move(s), std::move(t), 1}));
}

CanonTerm CanonTerm::gen(GenKind kind, std::vector<Word> args) {
  if (args.empty() && generator_arity(kind) > 0)
    args.assign(generator_arity(kind), Word::hole());
  return gen(make_generator(kind, false, std::move(args)));
}

CanonTerm CanonTerm::identity(Word w) {
  return gen(make_generator(GenKind::Identity, false, {std::move(w)}));
}

CanonTerm::Kind CanonTerm::kind() const noexcept { return node_->kind; }

const Generator& CanonTerm::generator() const {
  if (node_->kind != Kind::Gen) throw std::logic_error("CanonTerm::generator on composite");
  return node_->gen;
}

const CanonTerm& CanonTerm::first() const {
  if (node_->kind == Kind::Gen) throw std::logic_error("CanonTerm::first on generator");
  return *node_->a;
}

const CanonTerm& CanonTerm::second() const {
  if (node_->kind == Kind::Gen) throw std::logic_error("CanonTerm::second on generator");
  return *node_->b;
}

const Word& CanonTerm::source() const noexcept { return node_->source; }
const Word& CanonTerm::target() const noexcept { return node_->target; }

bool CanonTerm::is_identity() const noexcept {
  return node_->kind == Kind::Gen && node_->gen.kind == GenKind::Identity;
}

std::size_t CanonTerm::size() const noexcept { return node_->size; }

bool operator==(const CanonTerm& a, const CanonTerm& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size() || a.source() != b.source() ||
      a.target() != b.target())
    return false;
  if (a.kind() == CanonTerm::Kind::Gen) return a.generator() == b.generator();
  return a.first() == b.first() && a.second() == b.second();
}

BoundaryMismatch::BoundaryMismatch(const Word& expected, const Word& found)
    : std::invalid_argument("boundary mismatch: later term starts at " +
                            render_word(expected) + " but earlier term ends at " +
                            render_word(found)) {}

CanonTerm vcompose(const CanonTerm& later, const CanonTerm& earlier) {
  if (later.source() != earlier.target())
    throw BoundaryMismatch(later.source(), earlier.target());
  return CanonTerm(std::make_shared<CanonTerm::Node>(CanonTerm::Node{
      CanonTerm::Kind::VComp, Generator{}, later, earlier, earlier.source(),
      later.target(), later.size() + earlier.size() + 1}));
}

CanonTerm sum_par(const CanonTerm& left, const CanonTerm& right) {
  return CanonTerm(std::make_shared<CanonTerm::Node>(CanonTerm::Node{
      CanonTerm::Kind::SumPar, Generator{}, left, right,
      Word::sum(left.source(), right.source()), Word::sum(left.target(), right.target()),
      left.size() + right.size() + 1}));
}

CanonTerm prod_par(const CanonTerm& left, const CanonTerm& right) {
  return CanonTerm(std::make_shared<CanonTerm::Node>(CanonTerm::Node{
      CanonTerm::Kind::ProdPar, Generator{}, left, right,
      Word::prod(left.source(), right.source()),
      Word::prod(left.target(), right.target()), left.size() + right.size() + 1}));
}

CanonTerm par(Op op, const CanonTerm& left, const CanonTerm& right) {
  return op == Op::Sum ? sum_par(left, right) : prod_par(left, right);
}

CanonTerm compose_chain(const std::vector<CanonTerm>& steps) {
  if (steps.empty()) throw PreconditionError("compose_chain of an empty list");
  CanonTerm t = steps.front();
  for (std::size_t k = 1; k < steps.size(); ++k) t = vcompose(steps[k], t);
  return t;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

void render_into(const CanonTerm& t, std::string& out) {
  switch (t.kind()) {
    case CanonTerm::Kind::Gen: {
      const auto& g = t.generator();
      out += generator_name(g.kind);
      if (g.inverse) out += "^-1";
      const bool all_holes = std::all_of(g.args.begin(), g.args.end(),
                                         [](const Word& w) { return w == Word::hole(); });
      if (!g.args.empty() && !all_holes) {
        out += '(';
        for (std::size_t k = 0; k < g.args.size(); ++k) {
          if (k) out += ", ";
          out += render_word(g.args[k]);
        }
        out += ')';
      }
      return;
    }
    case CanonTerm::Kind::VComp: out += "comp("; break;
    case CanonTerm::Kind::SumPar: out += "par+("; break;
    case CanonTerm::Kind::ProdPar: out += "par*("; break;
  }
  render_into(t.first(), out);
  out += ", ";
  render_into(t.second(), out);
  out += ')';
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  CanonTerm parse_all() {
    CanonTerm t = parse();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c))
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '*')) ++pos_;
    if (start == pos_) throw SyntaxError("expected a term", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  // A word argument: find its extent by paren matching, then hand it off.
  Word word_arg() {
    skip_space();
    const std::size_t start = pos_;
    int               depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      ++pos_;
    }
    try {
      return parse_word(text_.substr(start, pos_ - start));
    } catch (const SyntaxError& e) {
      throw SyntaxError("bad word argument", start + e.offset());
    }
  }

  CanonTerm parse() {
    const std::size_t at = pos_;
    const std::string n  = name();
    if (n == "comp" || n == "par+" || n == "par*") {
      expect('(');
      CanonTerm a = parse();
      expect(',');
      CanonTerm b = parse();
      expect(')');
      if (n == "comp") {
        try {
          return vcompose(a, b);
        } catch (const BoundaryMismatch& e) {
          throw SyntaxError(e.what(), at);
        }
      }
      return n == "par+" ? sum_par(a, b) : prod_par(a, b);
    }
    auto kind = std::find_if(kAllKinds.begin(), kAllKinds.end(),
                             [&](GenKind k) { return generator_name(k) == n; });
    if (kind == kAllKinds.end()) throw SyntaxError("unknown generator '" + n + "'", at);
    bool inverse = false;
    if (text_.substr(pos_, 3) == "^-1") {
      inverse = true;
      pos_ += 3;
    }
    std::vector<Word> args;
    if (generator_arity(*kind) > 0 && peek('(')) {
      ++pos_;
      args.push_back(word_arg());
      while (peek(',')) {
        ++pos_;
        args.push_back(word_arg());
      }
      expect(')');
    } else {
      args.assign(generator_arity(*kind), Word::hole());
    }
    try {
      return CanonTerm::gen(make_generator(*kind, inverse, std::move(args)));
    } catch (const PreconditionError& e) {
      throw SyntaxError(e.what(), at);
    }
  }

  std::string_view text_;
  std::size_t      pos_ = 0;
};

}  // namespace

std::string render_term(const CanonTerm& t) {
  std::string out;
  render_into(t, out);
  return out;
}

CanonTerm parse_term(std::string_view text) { return TermParser(text).parse_all(); }

bool term_less(const CanonTerm& a, const CanonTerm& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return render_term(a) < render_term(b);
}

// ---------------------------------------------------------------------------
// Elementary terms

CanonTerm ElementaryTerm::to_term() const {
  std::function<CanonTerm(const Word&, std::size_t)> wrap =
      [&](const Word& w, std::size_t p) -> CanonTerm {
    if (p == 0) return CanonTerm::gen(inner);
    const std::size_t q = p - 1;
    if (q < w.left().size())
      return par(w.op(), wrap(w.left(), q), CanonTerm::identity(w.right()));
    return par(w.op(), CanonTerm::identity(w.left()),
               wrap(w.right(), q - w.left().size()));
  };
  return wrap(context, position);
}

namespace {

void factor_into(const CanonTerm& t, std::vector<ElementaryTerm>& out) {
  switch (t.kind()) {
    case CanonTerm::Kind::Gen:
      if (!t.is_identity()) out.push_back({t.source(), 0, t.generator()});
      return;
    case CanonTerm::Kind::VComp:
      factor_into(t.second(), out);
      factor_into(t.first(), out);
      return;
    case CanonTerm::Kind::SumPar:
    case CanonTerm::Kind::ProdPar: {
      const Op         op = t.kind() == CanonTerm::Kind::SumPar ? Op::Sum : Op::Prod;
      const CanonTerm& a  = t.first();
      const CanonTerm& b  = t.second();
      std::vector<ElementaryTerm> left, right;
      factor_into(a, left);
      factor_into(b, right);
      for (auto& e : left)
        out.push_back({Word::binary(op, e.context, b.source()), e.position + 1,
                       std::move(e.inner)});
      for (auto& e : right)
        out.push_back({Word::binary(op, a.target(), e.context),
                       1 + a.target().size() + e.position, std::move(e.inner)});
      return;
    }
  }
}

struct MoveKind {
  GenKind kind;
  bool    inverse;
};

std::vector<MoveKind> move_kinds(Mode mode) {
  std::vector<MoveKind> kinds;
  for (GenKind k : kAllKinds) {
    if (k == GenKind::Identity) continue;
    kinds.push_back({k, false});
    if (has_inverse_form(k, mode)) kinds.push_back({k, true});
  }
  return kinds;
}

}  // namespace

std::vector<ElementaryTerm> elementary_factorization(const CanonTerm& t) {
  std::vector<ElementaryTerm> out;
  factor_into(t, out);
  if (out.empty())
    out.push_back({t.source(), 0,
                   make_generator(GenKind::Identity, false, {t.source()})});
  return out;
}

std::vector<ElementaryTerm> elementary_moves_from(const Word& w, Mode mode) {
  static const auto      pre_kinds = move_kinds(Mode::Prelinear);
  static const auto      pl_kinds  = move_kinds(Mode::PartiallyLinear);
  const auto&            kinds     = mode == Mode::Prelinear ? pre_kinds : pl_kinds;
  std::vector<ElementaryTerm> out;
  for (std::size_t p = 0; p < w.size(); ++p) {
    const Word& s = w.at(p);
    for (const auto& mk : kinds) {
      auto args = match(mk.kind, !mk.inverse, s);
      if (!args) continue;
      out.push_back({w, p, Generator{mk.kind, mk.inverse, std::move(*args)}});
    }
  }
  return out;
}

std::vector<ElementaryTerm> elementary_moves_into(const Word& w, Mode mode) {
  static const auto      pre_kinds = move_kinds(Mode::Prelinear);
  static const auto      pl_kinds  = move_kinds(Mode::PartiallyLinear);
  const auto&            kinds     = mode == Mode::Prelinear ? pre_kinds : pl_kinds;
  std::vector<ElementaryTerm> out;
  for (std::size_t p = 0; p < w.size(); ++p) {
    const Word& s = w.at(p);
    for (const auto& mk : kinds) {
      auto args = match(mk.kind, mk.inverse, s);
      if (!args) continue;
      Generator g{mk.kind, mk.inverse, std::move(*args)};
      Word      src = w.replace_at(p, g.source());
      out.push_back({std::move(src), p, std::move(g)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Unit cancellation

CanonTerm point_morphism() {
  return compose_chain({
      CanonTerm::gen(make_generator(GenKind::RunitSum, true, {Word::one()})),
      CanonTerm::gen(GenKind::I, {Word::one(), Word::zero()}),
      CanonTerm::gen(GenKind::LunitProd, {Word::zero()}),
  });
}

CanonTerm collapse_to_unit(const Word& w, Op op) {
  if (w.length() != 0)
    throw PreconditionError("collapse requires a word of length 0, got " +
                            render_word(w));
  const Word unit = Word::unit(op);
  if (w == unit) return CanonTerm::identity(w);
  if (w.is_leaf()) {
    // The other unit.
    return op == Op::Sum ? point_morphism() : CanonTerm::gen(GenKind::J);
  }
  if (w.op() != op) {
    const CanonTerm own = collapse_to_unit(w, w.op());
    return vcompose(op == Op::Sum ? point_morphism() : CanonTerm::gen(GenKind::J), own);
  }
  const CanonTerm left   = collapse_to_unit(w.left(), op);
  const CanonTerm right  = collapse_to_unit(w.right(), op);
  const CanonTerm unitor = CanonTerm::gen(
      op == Op::Sum ? GenKind::LunitSum : GenKind::LunitProd, {unit});
  if (left.is_identity() && right.is_identity()) return unitor;
  return vcompose(unitor, par(op, left, right));
}

CanonTerm collapse_to_zero(const Word& w) { return collapse_to_unit(w, Op::Sum); }
CanonTerm collapse_to_one(const Word& w) { return collapse_to_unit(w, Op::Prod); }

LengthZeroCancellations length_zero_cancellations(const Word& w) {
  return {collapse_to_zero(w), collapse_to_one(w)};
}

namespace {

// The steps u_k, ..., u_1 taking attachments(core) back to core, in the order
// they are applied.
std::vector<CanonTerm> strip_attachments(const Word& core,
                                         const std::vector<Attachment>& attachments) {
  std::vector<Word> stages{core};
  for (const auto& a : attachments) stages.push_back(a.apply(stages.back()));
  std::vector<CanonTerm> steps;
  for (std::size_t k = attachments.size(); k-- > 0;) {
    const Attachment& a     = attachments[k];
    const Word&       inner = stages[k];
    const CanonTerm   kill  = collapse_to_unit(a.unit_word, a.op);
    GenKind           unitor;
    if (a.side == Side::Left)
      unitor = a.op == Op::Sum ? GenKind::LunitSum : GenKind::LunitProd;
    else
      unitor = a.op == Op::Sum ? GenKind::RunitSum : GenKind::RunitProd;
    CanonTerm step = CanonTerm::gen(unitor, {inner});
    if (!kill.is_identity()) {
      const CanonTerm id = CanonTerm::identity(inner);
      step = vcompose(step, a.side == Side::Left ? par(a.op, kill, id)
                                                 : par(a.op, id, kill));
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace

CanonTerm unit_cancel(const Word& w) {
  switch (w.length()) {
    case 0: {
      const bool sum_like =
          w.kind() == Word::Kind::UnitZero || w.kind() == Word::Kind::Sum;
      return sum_like ? collapse_to_zero(w) : collapse_to_one(w);
    }
    case 1: {
      auto steps = strip_attachments(Word::hole(), attachment_sequence(w));
      if (steps.empty()) return CanonTerm::identity(w);
      return compose_chain(steps);
    }
    case 2: {
      const CoreSplit split = core_split(w);
      auto            steps = strip_attachments(split.core(), split.attachments);
      steps.push_back(par(split.op, unit_cancel(split.w1), unit_cancel(split.w2)));
      return compose_chain(steps);
    }
    default:
      throw PreconditionError("unit cancellation is defined for words of length <= 2, got " +
                              render_word(w));
  }
}

CanonTerm normalized_cancel(const Word& w) {
  if (w.length() == 0) return collapse_to_zero(w);
  CanonTerm u = unit_cancel(w);
  if (u.target() == Word::sum(Word::hole(), Word::hole()))
    u = vcompose(CanonTerm::gen(GenKind::I), u);
  return u;
}

// ---------------------------------------------------------------------------
// Inversion

NotInvertible::NotInvertible(const Generator& g, Mode mode)
    : std::invalid_argument("generator " + generator_name(g.kind) +
                            (g.inverse ? "^-1" : "") + " is not invertible in " +
                            mode_name(mode) + " mode") {}

CanonTerm invert(const CanonTerm& t, Mode mode) {
  switch (t.kind()) {
    case CanonTerm::Kind::Gen: {
      const Generator& g = t.generator();
      if (g.kind == GenKind::Identity) return t;
      if (g.kind == GenKind::J) {
        if (mode != Mode::PartiallyLinear) throw NotInvertible(g, mode);
        return point_morphism();
      }
      if (!has_inverse_form(g.kind, mode)) throw NotInvertible(g, mode);
      return CanonTerm::gen(Generator{g.kind, !g.inverse, g.args});
    }
    case CanonTerm::Kind::VComp:
      return vcompose(invert(t.second(), mode), invert(t.first(), mode));
    case CanonTerm::Kind::SumPar:
      return sum_par(invert(t.first(), mode), invert(t.second(), mode));
    case CanonTerm::Kind::ProdPar:
      return prod_par(invert(t.first(), mode), invert(t.second(), mode));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Bounded enumeration

SearchLimitExceeded::SearchLimitExceeded(std::size_t limit)
    : std::runtime_error("canonical term enumeration exceeded " + std::to_string(limit) +
                         " terms") {}

struct DistanceBall {
  Word                                              center;
  std::size_t                                       radius;
  std::unordered_map<Word, std::size_t, WordHash>   distance;
};

std::shared_ptr<const DistanceBall> backward_ball(const Word& w, std::size_t radius,
                                                  Mode mode) {
  auto ball = std::make_shared<DistanceBall>();
  ball->center = w;
  ball->radius = radius;
  ball->distance.emplace(w, 0);
  std::vector<Word> frontier{w};
  for (std::size_t d = 1; d <= radius && !frontier.empty(); ++d) {
    std::vector<Word> next;
    for (const auto& u : frontier)
      for (auto& e : elementary_moves_into(u, mode))
        if (ball->distance.emplace(e.context, d).second) next.push_back(e.context);
    frontier = std::move(next);
  }
  return ball;
}

std::optional<std::size_t> distance_to_center(const DistanceBall& ball, const Word& u) {
  auto it = ball.distance.find(u);
  if (it == ball.distance.end()) return std::nullopt;
  return it->second;
}

std::vector<CanonTerm> canonical_between(const Word& v, const Word& w,
                                         std::size_t depth, Mode mode,
                                         std::size_t limit) {
  if (v.length() != w.length())
    throw PreconditionError("canonical_between requires words of equal length");
  if (depth == 0) throw PreconditionError("canonical_between requires depth >= 1");

  const auto ball = backward_ball(w, (depth + 1) / 2, mode);
  // Can `u` still reach w in at most `budget` steps?
  auto feasible = [&](const Word& u, std::size_t budget) {
    if (auto d = distance_to_center(*ball, u)) return *d <= budget;
    return budget > ball->radius;
  };

  std::vector<CanonTerm>      out;
  std::vector<ElementaryTerm> path;
  auto record = [&] {
    if (limit && out.size() >= limit) throw SearchLimitExceeded(limit);
    if (path.empty()) {
      out.push_back(CanonTerm::identity(v));
      return;
    }
    CanonTerm t = path.front().to_term();
    for (std::size_t k = 1; k < path.size(); ++k) t = vcompose(path[k].to_term(), t);
    out.push_back(std::move(t));
  };

  std::function<void(const Word&)> dfs = [&](const Word& u) {
    if (u == w) record();
    if (path.size() == depth) return;
    const std::size_t budget = depth - path.size() - 1;
    for (auto& e : elementary_moves_from(u, mode)) {
      Word next = e.target();
      if (!feasible(next, budget)) continue;
      path.push_back(std::move(e));
      dfs(next);
      path.pop_back();
    }
  };
  if (feasible(v, depth)) dfs(v);

  std::sort(out.begin(), out.end(), term_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace plcat
