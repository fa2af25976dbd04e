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

#include "plcat/eval.hpp"

#include <functional>

namespace plcat {

ArityMismatch::ArityMismatch(const Word& w, std::size_t given)
    : std::invalid_argument("word " + render_word(w) + " has length " +
                            std::to_string(w.length()) + " but " + std::to_string(given) +
                            " arguments were given") {}

namespace {

ObjId object_rec(const Model& m, const Word& w, std::span<const ObjId>& xs) {
  switch (w.kind()) {
    case Word::Kind::Hole: {
      const ObjId x = xs.front();
      xs            = xs.subspan(1);
      return x;
    }
    case Word::Kind::UnitZero: return m.zero();
    case Word::Kind::UnitOne: return m.one();
    case Word::Kind::Sum: {
      const ObjId a = object_rec(m, w.left(), xs);
      return m.sum(a, object_rec(m, w.right(), xs));
    }
    case Word::Kind::Prod: {
      const ObjId a = object_rec(m, w.left(), xs);
      return m.prod(a, object_rec(m, w.right(), xs));
    }
  }
  return m.zero();
}

Mor morphism_rec(const Model& m, const Word& w, std::span<const Mor>& fs) {
  switch (w.kind()) {
    case Word::Kind::Hole: {
      Mor f = fs.front();
      fs    = fs.subspan(1);
      return f;
    }
    case Word::Kind::UnitZero: return m.identity(m.zero());
    case Word::Kind::UnitOne: return m.identity(m.one());
    case Word::Kind::Sum: {
      Mor a = morphism_rec(m, w.left(), fs);
      return m.sum(a, morphism_rec(m, w.right(), fs));
    }
    case Word::Kind::Prod: {
      Mor a = morphism_rec(m, w.left(), fs);
      return m.prod(a, morphism_rec(m, w.right(), fs));
    }
  }
  return m.identity(m.zero());
}

StructureMap structure_of(GenKind kind) {
  switch (kind) {
    case GenKind::AssocSum: return StructureMap::AssocSum;
    case GenKind::LunitSum: return StructureMap::LunitSum;
    case GenKind::RunitSum: return StructureMap::RunitSum;
    case GenKind::AssocProd: return StructureMap::AssocProd;
    case GenKind::LunitProd: return StructureMap::LunitProd;
    case GenKind::RunitProd: return StructureMap::RunitProd;
    default: return StructureMap::I;
  }
}

}  // namespace

ObjId eval_object(const Model& m, const Word& w, std::span<const ObjId> objects) {
  if (objects.size() != w.length()) throw ArityMismatch(w, objects.size());
  return object_rec(m, w, objects);
}

Mor eval_morphism(const Model& m, const Word& w, std::span<const Mor> morphisms) {
  if (morphisms.size() != w.length()) throw ArityMismatch(w, morphisms.size());
  return morphism_rec(m, w, morphisms);
}

Mor eval_generator(const Model& m, const Generator& g, std::span<const ObjId> objects) {
  if (objects.size() != g.length()) throw ArityMismatch(g.source(), objects.size());
  switch (g.kind) {
    case GenKind::Identity: return m.identity(eval_object(m, g.args[0], objects));
    case GenKind::J: return m.j();
    default: break;
  }
  std::vector<ObjId> args;
  for (const auto& a : g.args) {
    const std::size_t n = a.length();
    args.push_back(eval_object(m, a, objects.first(n)));
    objects = objects.subspan(n);
  }
  const StructureMap map = structure_of(g.kind);
  if (!g.inverse) return m.structure(map, args);
  if (g.kind != GenKind::I) return m.structure_inverse(map, args);
  const Mor f = m.structure(map, args);
  if (auto inv = m.inverse(f)) return *inv;
  throw IntegrityError("i is not invertible at " + m.describe(f));
}

Mor eval_canon(const Model& m, const CanonTerm& t, std::span<const ObjId> objects) {
  if (objects.size() != t.source().length()) throw ArityMismatch(t.source(), objects.size());
  switch (t.kind()) {
    case CanonTerm::Kind::Gen: return eval_generator(m, t.generator(), objects);
    case CanonTerm::Kind::VComp:
      return m.compose(eval_canon(m, t.first(), objects),
                       eval_canon(m, t.second(), objects));
    case CanonTerm::Kind::SumPar:
    case CanonTerm::Kind::ProdPar: {
      const std::size_t n = t.first().source().length();
      Mor               a = eval_canon(m, t.first(), objects.first(n));
      Mor               b = eval_canon(m, t.second(), objects.subspan(n));
      return t.kind() == CanonTerm::Kind::SumPar ? m.sum(a, b) : m.prod(a, b);
    }
  }
  throw std::logic_error("unreachable");
}

Mor eval_elementary(const Model& m, const ElementaryTerm& e,
                    std::span<const ObjId> objects) {
  const Word& ctx = e.context;
  if (objects.size() != ctx.length()) throw ArityMismatch(ctx, objects.size());
  // Identities around the distinguished position, the component inside it.
  std::size_t hole = 0;
  std::function<Mor(const Word&, std::size_t)> walk = [&](const Word& w,
                                                          std::size_t p) -> Mor {
    if (p == 0) {
      const std::size_t n = w.length();
      Mor f = eval_generator(m, e.inner, objects.subspan(hole, n));
      hole += n;
      return f;
    }
    const std::size_t q = p - 1;
    const bool        in_left = q < w.left().size();
    const Word&       other   = in_left ? w.right() : w.left();
    auto              id_of   = [&](const Word& x) {
      const std::size_t n = x.length();
      Mor f = m.identity(eval_object(m, x, objects.subspan(hole, n)));
      hole += n;
      return f;
    };
    Mor a = in_left ? walk(w.left(), q) : id_of(other);
    Mor b = in_left ? id_of(other) : walk(w.right(), q - w.left().size());
    return w.op() == Op::Sum ? m.sum(a, b) : m.prod(a, b);
  };
  return walk(ctx, e.position);
}

namespace {

// w with every hole except `index` replaced by `unit`.
Word isolate(const Word& w, std::size_t index, const Word& unit, std::size_t& seen) {
  switch (w.kind()) {
    case Word::Kind::Hole: return seen++ == index ? w : unit;
    case Word::Kind::UnitZero:
    case Word::Kind::UnitOne: return w;
    default: {
      Word l = isolate(w.left(), index, unit, seen);
      return Word::binary(w.op(), l, isolate(w.right(), index, unit, seen));
    }
  }
}

void check_species(const Word& w, Op op, std::span<const ObjId> objects,
                   std::size_t index) {
  if (!is_pure(w, op))
    throw PreconditionError(std::string(op == Op::Sum ? "inclusions" : "projections") +
                            " need a pure " + op_symbol(op) + "-word, got " +
                            render_word(w));
  if (objects.size() != w.length()) throw ArityMismatch(w, objects.size());
  if (index >= w.length())
    throw PreconditionError("index " + std::to_string(index) + " out of range for " +
                            render_word(w));
}

}  // namespace

Mor inclusion(const Model& m, const Word& w, std::span<const ObjId> objects,
              std::size_t index) {
  check_species(w, Op::Sum, objects, index);
  std::size_t seen   = 0;
  const Word  single = isolate(w, index, Word::zero(), seen);
  const ObjId x      = objects[index];
  // X -> w(0, .., X, .., 0) -> w(X_1, .., X_n)
  const Mor iso = eval_canon(m, invert(unit_cancel(single), Mode::Prelinear), {&x, 1});
  std::vector<Mor> parts;
  for (std::size_t k = 0; k < objects.size(); ++k)
    parts.push_back(k == index ? m.identity(x) : m.bang_from_zero(objects[k]));
  return m.compose(eval_morphism(m, w, parts), iso);
}

Mor projection(const Model& m, const Word& w, std::span<const ObjId> objects,
               std::size_t index) {
  check_species(w, Op::Prod, objects, index);
  std::size_t seen   = 0;
  const Word  single = isolate(w, index, Word::one(), seen);
  const ObjId x      = objects[index];
  const Mor   iso    = eval_canon(m, unit_cancel(single), {&x, 1});
  std::vector<Mor> parts;
  for (std::size_t k = 0; k < objects.size(); ++k)
    parts.push_back(k == index ? m.identity(x) : m.bang_to_one(objects[k]));
  return m.compose(iso, eval_morphism(m, w, parts));
}

Mor zero_morphism(const Model& m, ObjId x, ObjId y) {
  static const CanonTerm point = point_morphism();
  const Mor              p     = eval_canon(m, point, {});
  return m.compose(m.bang_from_zero(y), m.compose(p, m.bang_to_one(x)));
}

std::vector<std::vector<ObjId>> object_tuples(const Model& m, std::size_t arity,
                                              std::size_t max_size) {
  std::vector<ObjId> pool;
  for (ObjId x : m.objects())
    if (m.carrier_size(x) <= max_size) pool.push_back(x);
  std::vector<std::vector<ObjId>> out;
  std::vector<std::size_t>        idx(arity, 0);
  if (pool.empty() && arity > 0) return out;
  while (true) {
    std::vector<ObjId> t;
    for (auto k : idx) t.push_back(pool[k]);
    out.push_back(std::move(t));
    std::size_t k = arity;
    while (k > 0 && idx[k - 1] == pool.size() - 1) idx[--k] = 0;
    if (k == 0) break;
    ++idx[k - 1];
  }
  return out;
}

}  // namespace plcat
