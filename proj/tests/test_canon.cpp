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

#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "plcat/canon.hpp"

using namespace plcat;

namespace {

const Word H = Word::hole();
const Word Z = Word::zero();
const Word O = Word::one();

Word W(const char* s) { return parse_word(s); }

// Every path of at most `depth` elementary moves from v to w, rendered,
// found without any pruning.
std::set<std::string> brute_paths(const Word& v, const Word& w, std::size_t depth,
                                  Mode mode) {
  std::set<std::string>          out;
  std::vector<CanonTerm>         stack;
  std::function<void(const Word&)> go = [&](const Word& u) {
    if (u == w) {
      if (stack.empty()) {
        out.insert(render_term(CanonTerm::identity(v)));
      } else {
        CanonTerm t = stack.front();
        for (std::size_t k = 1; k < stack.size(); ++k) t = vcompose(stack[k], t);
        out.insert(render_term(t));
      }
    }
    if (stack.size() == depth) return;
    for (const auto& e : elementary_moves_from(u, mode)) {
      stack.push_back(e.to_term());
      go(e.target());
      stack.pop_back();
    }
  };
  go(v);
  return out;
}

}  // namespace

TEST_CASE("generator boundaries") {
  const auto l = CanonTerm::gen(GenKind::LunitSum);
  CHECK(l.source() == Word::sum(Z, H));
  CHECK(l.target() == H);
  const auto i = CanonTerm::gen(GenKind::I);
  CHECK(i.source() == Word::sum(H, H));
  CHECK(i.target() == Word::prod(H, H));
  const auto id = CanonTerm::identity(H);
  CHECK(id.source() == H);
  CHECK(id.target() == H);
  const auto j = CanonTerm::gen(GenKind::J);
  CHECK(j.source() == Z);
  CHECK(j.target() == O);
  const auto a = CanonTerm::gen(GenKind::AssocProd, {H, Z, H});
  CHECK(a.source() == W("(_*(0*_))"));
  CHECK(a.target() == W("((_*0)*_)"));
  CHECK_THROWS_AS(make_generator(GenKind::J, true, {}), PreconditionError);
  CHECK_THROWS_AS(make_generator(GenKind::I, false, {H}), PreconditionError);
}

TEST_CASE("vcompose checks boundaries") {
  const auto l = CanonTerm::gen(GenKind::LunitSum);
  CHECK_THROWS_AS(vcompose(l, l), BoundaryMismatch);
  try {
    vcompose(l, l);
  } catch (const BoundaryMismatch& e) {
    const std::string what = e.what();
    CHECK(what.find("(0+_)") != std::string::npos);
    CHECK(what.find("_") != std::string::npos);
  }
  const auto t = vcompose(CanonTerm::identity(H), l);
  CHECK(t.source() == l.source());
  CHECK(t.target() == l.target());
  // lunit* o i(1, 0) is well formed.
  const auto p = vcompose(CanonTerm::gen(GenKind::LunitProd, {Z}),
                          CanonTerm::gen(GenKind::I, {O, Z}));
  CHECK(p.source() == W("(1+0)"));
  CHECK(p.target() == Z);
}

TEST_CASE("parallel composites") {
  const auto t = sum_par(CanonTerm::gen(GenKind::LunitProd), CanonTerm::identity(H));
  CHECK(t.source() == W("((1*_)+_)"));
  CHECK(t.target() == W("(_+_)"));
  const auto u = prod_par(CanonTerm::gen(GenKind::I), CanonTerm::gen(GenKind::J));
  CHECK(u.source() == W("((_+_)*0)"));
  CHECK(u.target() == W("((_*_)*1)"));
}

TEST_CASE("term text round trip") {
  for (const char* text :
       {"lunit+", "i", "j", "id", "id((_+0))", "lunit+^-1((_*_))", "comp(i, par+(id, runit*))",
        "par*(comp(runit+, runit+^-1), i(0, _))", "assoc*(_, (1+_), 0)"}) {
    const CanonTerm t = parse_term(text);
    CHECK(render_term(t) == text);
    CHECK(parse_term(render_term(t)) == t);
  }
  CHECK_THROWS(parse_term("comp(lunit+, lunit+)"));
  CHECK_THROWS(parse_term("lunit"));
  CHECK_THROWS(parse_term("j^-1"));
  CHECK_THROWS(parse_term("par+(id"));
}

TEST_CASE("elementary factorization examples") {
  const auto i = elementary_factorization(CanonTerm::gen(GenKind::I));
  REQUIRE(i.size() == 1);
  CHECK(i[0].position == 0);
  CHECK(i[0].inner.kind == GenKind::I);

  const auto t = sum_par(CanonTerm::gen(GenKind::LunitProd), CanonTerm::identity(H));
  const auto f = elementary_factorization(t);
  REQUIRE(f.size() == 1);
  CHECK(f[0].context == W("((1*_)+_)"));
  CHECK(f[0].position == 1);
  CHECK(f[0].inner.kind == GenKind::LunitProd);
  CHECK(f[0].target() == W("(_+_)"));

  const auto a = CanonTerm::gen(GenKind::RunitSum);
  const auto b = CanonTerm::gen(GenKind::LunitProd, {W("(_+0)")});
  const auto c = vcompose(a, b);
  const auto fc = elementary_factorization(c);
  REQUIRE(fc.size() == 2);
  CHECK(fc[0] == elementary_factorization(b)[0]);
  CHECK(fc[1] == elementary_factorization(a)[0]);

  const auto id = elementary_factorization(CanonTerm::identity(W("(_*0)")));
  REQUIRE(id.size() == 1);
  CHECK(id[0].inner.kind == GenKind::Identity);
}

TEST_CASE("factorizations chain and rebuild boundaries") {
  const auto u = par(Op::Sum, CanonTerm::gen(GenKind::I),
                     vcompose(CanonTerm::gen(GenKind::RunitProd),
                              CanonTerm::gen(GenKind::LunitSum, {W("(_*1)")})));
  const auto f = elementary_factorization(u);
  REQUIRE(f.size() == 3);
  CHECK(f.front().source() == u.source());
  CHECK(f.back().target() == u.target());
  for (std::size_t k = 1; k < f.size(); ++k) CHECK(f[k].source() == f[k - 1].target());
  for (const auto& e : f) {
    const auto t = e.to_term();
    CHECK(t.source() == e.source());
    CHECK(t.target() == e.target());
  }
}

TEST_CASE("point morphism and collapses") {
  const auto p = point_morphism();
  CHECK(p.source() == O);
  CHECK(p.target() == Z);
  CHECK(render_term(p) == "comp(lunit*(0), comp(i(1, 0), runit+^-1(1)))");
  CHECK(collapse_to_zero(Z).is_identity());
  CHECK(collapse_to_one(Z) == CanonTerm::gen(GenKind::J));
  CHECK(collapse_to_zero(O) == p);
  const auto c = collapse_to_zero(W("(0*1)"));
  CHECK(c.source() == W("(0*1)"));
  CHECK(c.target() == Z);
  CHECK_THROWS_AS(collapse_to_zero(H), PreconditionError);
  for (const auto& w : enumerate_words(0, 4)) {
    CHECK(collapse_to_zero(w).source() == w);
    CHECK(collapse_to_zero(w).target() == Z);
    CHECK(collapse_to_one(w).target() == O);
  }
}

TEST_CASE("unit cancellation examples") {
  CHECK(unit_cancel(W("(_+0)")) == CanonTerm::gen(GenKind::RunitSum));
  CHECK(render_term(unit_cancel(W("(_+0)"))) == "runit+");

  const auto u = unit_cancel(W("(0+(_*1))"));
  CHECK(u.source() == W("(0+(_*1))"));
  CHECK(u.target() == H);
  CHECK(render_term(u) == "comp(runit*, lunit+((_*1)))");

  const auto v = unit_cancel(W("((_+0)*_)"));
  CHECK(v == prod_par(CanonTerm::gen(GenKind::RunitSum), CanonTerm::identity(H)));
  CHECK(v.target() == W("(_*_)"));

  CHECK(unit_cancel(H).is_identity());
  CHECK(unit_cancel(W("(0+1)")).target() == Z);
  CHECK(unit_cancel(W("(0*1)")).target() == O);
  const auto both = length_zero_cancellations(W("(0*1)"));
  CHECK(both.to_zero.target() == Z);
  CHECK(both.to_one.target() == O);
  CHECK_THROWS_AS(unit_cancel(W("((_+_)+_)")), PreconditionError);
}

TEST_CASE("unit cancellation lands on the unit-free core") {
  for (std::size_t n = 0; n <= 2; ++n)
    for (const auto& w : enumerate_words(n, 3)) {
      const auto u = unit_cancel(w);
      CHECK(u.source() == w);
      if (n > 0) CHECK(u.target() == unit_free_core(w));
      CHECK(u.target().units() == (n == 0 ? 1u : 0u));
      const auto nc = normalized_cancel(w);
      CHECK(nc.source() == w);
      if (n == 2) CHECK(nc.target() == W("(_*_)"));
      if (n == 1) CHECK(nc.target() == H);
      if (n == 0) CHECK(nc.target() == Z);
    }
}

TEST_CASE("inversion") {
  const auto l = CanonTerm::gen(GenKind::LunitSum);
  CHECK(invert(l, Mode::Prelinear) ==
        CanonTerm::gen(make_generator(GenKind::LunitSum, true, {H})));
  CHECK_THROWS_AS(invert(CanonTerm::gen(GenKind::I), Mode::Prelinear), NotInvertible);
  CHECK(invert(CanonTerm::gen(GenKind::I), Mode::PartiallyLinear) ==
        CanonTerm::gen(make_generator(GenKind::I, true, {H, H})));
  CHECK_THROWS_AS(invert(CanonTerm::gen(GenKind::J), Mode::Prelinear), NotInvertible);
  try {
    invert(CanonTerm::gen(GenKind::I), Mode::Prelinear);
  } catch (const NotInvertible& e) {
    CHECK(std::string(e.what()).find("prelinear") != std::string::npos);
  }
  for (const auto& w : enumerate_words(2, 2)) {
    const auto u = unit_cancel(w);
    const auto r = invert(u, Mode::PartiallyLinear);
    CHECK(r.source() == u.target());
    CHECK(r.target() == u.source());
    CHECK_NOTHROW(vcompose(r, u));
    CHECK_NOTHROW(vcompose(u, r));
  }
}

TEST_CASE("elementary moves") {
  const auto from = elementary_moves_from(W("(_+_)"), Mode::Prelinear);
  std::set<std::string> names;
  for (const auto& e : from) {
    CHECK(e.source() == W("(_+_)"));
    names.insert(render_term(e.to_term()));
  }
  CHECK(names.count("i"));
  CHECK(names.count("lunit+^-1((_+_))"));
  CHECK(names.count("par+(runit*^-1, id)"));
  CHECK_FALSE(names.count("i^-1"));
  for (const auto& e : elementary_moves_from(W("(_*_)"), Mode::PartiallyLinear))
    names.insert(render_term(e.to_term()));
  CHECK(names.count("i^-1"));
  // J only forwards.
  for (const auto& e : elementary_moves_from(O, Mode::PartiallyLinear))
    CHECK(e.inner.kind != GenKind::J);
  for (Mode mode : {Mode::Prelinear, Mode::PartiallyLinear})
    for (const auto& w : enumerate_words(2, 1)) {
      for (const auto& e : elementary_moves_into(w, mode)) {
        CHECK(e.target() == w);
        const auto back = elementary_moves_from(e.source(), mode);
        CHECK(std::find(back.begin(), back.end(), e) != back.end());
      }
      for (const auto& e : elementary_moves_from(w, mode))
        CHECK(e.target().length() == w.length());
    }
}

TEST_CASE("canonical_between examples") {
  const auto a = canonical_between(H, H, 1, Mode::Prelinear);
  CHECK(std::find(a.begin(), a.end(), CanonTerm::identity(H)) != a.end());
  const auto b = canonical_between(W("(_+_)"), W("(_*_)"), 1, Mode::Prelinear);
  CHECK(b == std::vector<CanonTerm>{CanonTerm::gen(GenKind::I)});
  const auto c = canonical_between(W("(0+_)"), H, 3, Mode::Prelinear);
  CHECK(std::find(c.begin(), c.end(), CanonTerm::gen(GenKind::LunitSum)) != c.end());
  CHECK(c.size() > 1);
  for (const auto& t : c) {
    CHECK(t.source() == W("(0+_)"));
    CHECK(t.target() == H);
  }
  CHECK(canonical_between(W("(_*_)"), W("(_+_)"), 3, Mode::Prelinear).empty());
  CHECK_FALSE(canonical_between(W("(_*_)"), W("(_+_)"), 1, Mode::PartiallyLinear).empty());
  CHECK_THROWS_AS(canonical_between(H, Z, 2, Mode::Prelinear), PreconditionError);
  CHECK_THROWS_AS(canonical_between(W("(_+_)"), W("(_*_)"), 4, Mode::Prelinear, 5),
                  SearchLimitExceeded);
}

TEST_CASE("canonical_between agrees with unpruned path search") {
  const std::pair<const char*, const char*> pairs[] = {
      {"(_+_)", "(_*_)"}, {"(0+_)", "_"}, {"_", "(_*1)"}, {"(_+(_+_))", "((_*_)*_)"},
      {"0", "1"},         {"(1+0)", "0"}, {"((_+0)*_)", "(_*_)"}};
  for (Mode mode : {Mode::Prelinear, Mode::PartiallyLinear})
    for (auto [v, w] : pairs)
      for (std::size_t depth = 1; depth <= 3; ++depth) {
        std::set<std::string> got;
        for (const auto& t : canonical_between(W(v), W(w), depth, mode))
          got.insert(render_term(t));
        CHECK(got == brute_paths(W(v), W(w), depth, mode));
      }
}

TEST_CASE("canonical_between output is sorted and unique") {
  const auto ts = canonical_between(W("(_+_)"), W("(_*_)"), 4, Mode::Prelinear);
  CHECK(std::is_sorted(ts.begin(), ts.end(), term_less));
  for (std::size_t k = 1; k < ts.size(); ++k) CHECK_FALSE(ts[k - 1] == ts[k]);
}
