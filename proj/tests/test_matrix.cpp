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

#include "doctest.h"
#include "plcat/eval.hpp"
#include "plcat/matrix.hpp"
#include "support.hpp"

using namespace plcat;

namespace {

Word W(const char* s) { return parse_word(s); }

// The realizer of a 2x2 matrix (A+B) -> (C*D) of pointed sets, built directly
// from the wedge and lexicographic numberings.
std::vector<int> wedge_oracle(const std::vector<std::vector<Mor>>& e, std::size_t a,
                              std::size_t b, std::size_t d) {
  std::vector<int> out(a + b - 1, 0);
  for (std::size_t x = 1; x < a; ++x)
    out[x] = e[0][0].map[x] * static_cast<int>(d) + e[1][0].map[x];
  for (std::size_t y = 1; y < b; ++y)
    out[a - 1 + y] = e[0][1].map[y] * static_cast<int>(d) + e[1][1].map[y];
  return out;
}

}  // namespace

TEST_CASE("matrix round trip in pointed sets") {
  auto        ps = PointedSets::up_to(3);
  const ObjId p2 = *ps->find("P2"), p3 = *ps->find("P3");
  const std::vector<ObjId> src{p2, p3}, tgt{p3, p2};
  const ObjId              s = ps->sum(p2, p3), t = ps->prod(p3, p2);
  std::size_t              realized = 0;
  for (const auto& f : ps->hom(s, t)) {
    const auto p = matrix_of(*ps, f, W("(_+_)"), src, W("(_*_)"), tgt);
    REQUIRE(p.rows() == 2);
    REQUIRE(p.cols() == 2);
    const auto back = realize(*ps, p);
    REQUIRE(back.has_value());
    CHECK(*back == f);
    CHECK(back->map == wedge_oracle(p.entries, 2, 3, 2));
    ++realized;
  }
  CHECK(realized == ps->hom(s, t).size());
}

TEST_CASE("every pointed-set matrix has exactly one realizer") {
  auto        ps = PointedSets::up_to(3);
  const ObjId p2 = *ps->find("P2"), p3 = *ps->find("P3");
  const std::vector<ObjId> src{p3, p2}, tgt{p2, p3};
  std::size_t              count = 0;
  for (const auto& e00 : ps->hom(p3, p2))
    for (const auto& e01 : ps->hom(p2, p2))
      for (const auto& e10 : ps->hom(p3, p3))
        for (const auto& e11 : ps->hom(p2, p3)) {
          const std::vector<std::vector<Mor>> e{{e00, e01}, {e10, e11}};
          const auto p = make_matrix(*ps, W("(_+_)"), src, W("(_*_)"), tgt, e);
          const auto f = realize(*ps, p);
          REQUIRE(f.has_value());
          CHECK(f->map == wedge_oracle(e, 3, 2, 3));
          ++count;
        }
  CHECK(count == 4 * 2 * 9 * 3);
}

TEST_CASE("identity matrix realizes to i") {
  auto ps = PointedSets::up_to(3);
  auto cm = CommutativeMonoids::up_to(3);
  for (const Model* m : {static_cast<const Model*>(ps.get()), static_cast<const Model*>(cm.get())}) {
    for (const auto& ab : object_tuples(*m, 2, 3)) {
      const auto p = identity_matrix(*m, ab);
      const auto f = realize(*m, p);
      REQUIRE(f.has_value());
      CHECK(*f == m->i(ab[0], ab[1]));
    }
  }
}

TEST_CASE("commutative monoid matrices add entries pointwise") {
  auto        cm = CommutativeMonoids::up_to(3);
  const ObjId c2 = *cm->find("C2"), c3 = *cm->find("C3");
  const std::vector<ObjId> src{c2, c3}, tgt{c3, c2};
  const ObjId              s = cm->sum(c2, c3), t = cm->prod(c3, c2);
  for (const auto& f : cm->hom(s, t)) {
    const auto p = matrix_of(*cm, f, W("(_+_)"), src, W("(_*_)"), tgt);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 3; ++b) {
        const int u = cm->multiply(c3, p.entries[0][0].map[a], p.entries[0][1].map[b]);
        const int v = cm->multiply(c2, p.entries[1][0].map[a], p.entries[1][1].map[b]);
        CHECK(f.map[static_cast<std::size_t>(a * 3 + b)] == u * 2 + v);
      }
    CHECK(realize(*cm, p) == f);
  }
}

TEST_CASE("matrices of length-3 words") {
  auto        ps = PointedSets::up_to(2);
  const ObjId p2 = *ps->find("P2");
  const std::vector<ObjId> xs{p2, p2, p2};
  const auto  p = identity_matrix(*ps, xs, W("((_+_)+_)"), W("(_*(_*_))"));
  CHECK(p.rows() == 3);
  CHECK(p.cols() == 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l)
      CHECK(p.entries[k][l] == (k == l ? ps->identity(p2) : zero_morphism(*ps, p2, p2)));
  const auto f = realize(*ps, p);
  REQUIRE(f.has_value());
  CHECK(matrix_of(*ps, *f, W("((_+_)+_)"), xs, W("(_*(_*_))"), xs) == p);
  CHECK_FALSE(render_matrix(*ps, p).empty());
}

TEST_CASE("make_matrix rejects ill-typed entries") {
  auto        ps = PointedSets::up_to(3);
  const ObjId p2 = *ps->find("P2"), p3 = *ps->find("P3");
  const Mor   id2 = ps->identity(p2), id3 = ps->identity(p3);
  CHECK_THROWS(make_matrix(*ps, W("(_+_)"), {p2, p2}, W("(_*_)"), {p2, p2},
                           {{id2, id3}, {id2, id2}}));
  CHECK_THROWS(make_matrix(*ps, W("(_*_)"), {p2, p2}, W("(_*_)"), {p2, p2},
                           {{id2, id2}, {id2, id2}}));
}
