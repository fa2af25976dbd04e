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

#include "plcat/checks.hpp"

#include <algorithm>
#include <set>

#include "laws.hpp"
#include "plcat/eval.hpp"
#include "plcat/matrix.hpp"
#include "plcat/word.hpp"

namespace plcat {

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.passed; });
}

namespace detail {

std::vector<ObjId> pool(const Model& m, std::size_t max_size) {
  std::vector<ObjId> out;
  for (ObjId x : m.objects())
    if (m.carrier_size(x) <= max_size) out.push_back(x);
  return out;
}

std::vector<Mor> arrows(const Model& m, const std::vector<ObjId>& objects) {
  std::vector<Mor> out;
  for (ObjId a : objects)
    for (ObjId b : objects)
      for (const Mor& f : m.hom(a, b)) out.push_back(f);
  return out;
}

std::map<ObjId, std::vector<Mor>> arrows_by_domain(const std::vector<Mor>& all) {
  std::map<ObjId, std::vector<Mor>> out;
  for (const Mor& f : all) out[f.dom].push_back(f);
  return out;
}

Verdict expect_equal(const Model& m, const Mor& lhs, const Mor& rhs, std::string_view what) {
  if (lhs == rhs) return std::nullopt;
  return std::string(what) + ": " + m.describe(lhs) + " vs " + m.describe(rhs);
}

const Law* find_law(std::string_view name) {
  for (const auto* suite : {&structure_laws(), &transformer_laws(), &prelinear_laws(),
                            &centrality_laws(), &coherence_laws(),
                            &coherence_sweep_laws()})
    for (const Law& law : *suite)
      if (law.name == name) return &law;
  return nullptr;
}

namespace {

Verdict guarded(const Law& law, const LawContext& ctx, const Instance& inst) {
  try {
    return law.check(ctx, inst);
  } catch (const IntegrityError& e) {
    return std::string("integrity failure: ") + e.what();
  }
}

}  // namespace

CheckReport run(const Law& law, const LawContext& ctx) {
  CheckReport report;
  report.law = law.name;
  law.instances(ctx, [&](const Instance& inst) {
    ++report.instances;
    if (auto v = guarded(law, ctx, inst)) {
      ++report.failures;
      report.passed = false;
      if (!report.counterexample) report.counterexample = Counterexample{law.name, inst, *v};
    }
    return true;
  });
  return report;
}

namespace {

using Fn = std::function<Verdict(const LawContext&, const Instance&)>;

Instance objs(std::vector<ObjId> o) { return Instance{std::move(o), {}, {}}; }
Instance mors(std::vector<Mor> f) { return Instance{{}, std::move(f), {}}; }

// Instance generators.
void each_object(const LawContext& c, const Visit& visit) {
  for (ObjId a : pool(c.m, c.options.max_size))
    if (!visit(objs({a}))) return;
}

void each_pair(const LawContext& c, const Visit& visit) {
  const auto p = pool(c.m, c.options.max_size);
  for (ObjId a : p)
    for (ObjId b : p)
      if (!visit(objs({a, b}))) return;
}

void each_quad(const LawContext& c, const Visit& visit) {
  const auto p = pool(c.m, c.options.max_size);
  for (ObjId a : p)
    for (ObjId b : p)
      for (ObjId d : p)
        for (ObjId e : p)
          if (!visit(objs({a, b, d, e}))) return;
}

void each_arrow(const LawContext& c, const Visit& visit) {
  for (const Mor& f : arrows(c.m, pool(c.m, c.options.max_size)))
    if (!visit(mors({f}))) return;
}

void each_arrow_pair(const LawContext& c, const Visit& visit) {
  const auto all = arrows(c.m, pool(c.m, c.options.max_size));
  for (const Mor& f : all)
    for (const Mor& g : all)
      if (!visit(mors({f, g}))) return;
}

void each_arrow_triple(const LawContext& c, const Visit& visit) {
  const auto all = arrows(c.m, pool(c.m, c.options.max_size));
  for (const Mor& f : all)
    for (const Mor& g : all)
      for (const Mor& h : all)
        if (!visit(mors({f, g, h}))) return;
}

// f then g then h.
void each_composable_triple(const LawContext& c, const Visit& visit) {
  const auto all = arrows(c.m, pool(c.m, c.options.max_size));
  auto       out = arrows_by_domain(all);
  for (const Mor& f : all)
    for (const Mor& g : out[f.cod])
      for (const Mor& h : out[g.cod])
        if (!visit(mors({f, g, h}))) return;
}

// (f, g) and (f', g') composable pairs.
void each_two_composable_pairs(const LawContext& c, const Visit& visit) {
  const auto all = arrows(c.m, pool(c.m, c.options.max_size));
  auto       out = arrows_by_domain(all);
  std::vector<std::pair<Mor, Mor>> pairs;
  for (const Mor& f : all)
    for (const Mor& g : out[f.cod]) pairs.emplace_back(f, g);
  for (const auto& [f, g] : pairs)
    for (const auto& [f2, g2] : pairs)
      if (!visit(mors({f, g, f2, g2}))) return;
}

Mor op(const Model& m, Op o, const Mor& f, const Mor& g) {
  return o == Op::Sum ? m.sum(f, g) : m.prod(f, g);
}
ObjId op(const Model& m, Op o, ObjId a, ObjId b) {
  return o == Op::Sum ? m.sum(a, b) : m.prod(a, b);
}
StructureMap assoc(Op o) { return o == Op::Sum ? StructureMap::AssocSum : StructureMap::AssocProd; }
StructureMap lunit(Op o) { return o == Op::Sum ? StructureMap::LunitSum : StructureMap::LunitProd; }
StructureMap runit(Op o) { return o == Op::Sum ? StructureMap::RunitSum : StructureMap::RunitProd; }
ObjId        unit(const Model& m, Op o) { return o == Op::Sum ? m.zero() : m.one(); }
std::string  tag(Op o) { return o == Op::Sum ? "sum" : "prod"; }

Verdict functor_identity(Op o, const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const ObjId  a = i.objects.at(0), b = i.objects.at(1);
  return expect_equal(m, op(m, o, m.identity(a), m.identity(b)), m.identity(op(m, o, a, b)),
                      "1 " + std::string(1, op_symbol(o)) + " 1");
}

Verdict functor_composition(Op o, const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const Mor &f = i.morphisms.at(0), &g = i.morphisms.at(1), &f2 = i.morphisms.at(2),
            &g2 = i.morphisms.at(3);
  return expect_equal(m, op(m, o, m.compose(g, f), m.compose(g2, f2)),
                      m.compose(op(m, o, g, g2), op(m, o, f, f2)), "interchange");
}

Verdict assoc_natural(Op o, const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const Mor &f = i.morphisms.at(0), &g = i.morphisms.at(1), &h = i.morphisms.at(2);
  const Mor lhs = m.compose(m.structure(assoc(o), {f.cod, g.cod, h.cod}),
                            op(m, o, f, op(m, o, g, h)));
  const Mor rhs = m.compose(op(m, o, op(m, o, f, g), h),
                            m.structure(assoc(o), {f.dom, g.dom, h.dom}));
  return expect_equal(m, lhs, rhs, "associator naturality square");
}

Verdict lunit_natural(Op o, const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const Mor&   f = i.morphisms.at(0);
  const Mor lhs  = m.compose(m.structure(lunit(o), {f.cod}), op(m, o, m.identity(unit(m, o)), f));
  const Mor rhs  = m.compose(f, m.structure(lunit(o), {f.dom}));
  return expect_equal(m, lhs, rhs, "left unitor naturality square");
}

Verdict runit_natural(Op o, const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const Mor&   f = i.morphisms.at(0);
  const Mor lhs  = m.compose(m.structure(runit(o), {f.cod}), op(m, o, f, m.identity(unit(m, o))));
  const Mor rhs  = m.compose(f, m.structure(runit(o), {f.dom}));
  return expect_equal(m, lhs, rhs, "right unitor naturality square");
}

Verdict pentagon(Op o, const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const ObjId a = i.objects.at(0), b = i.objects.at(1), d = i.objects.at(2), e = i.objects.at(3);
  // a(b(de)) -> (ab)(de) -> ((ab)d)e
  const Mor top = m.compose(m.structure(assoc(o), {op(m, o, a, b), d, e}),
                            m.structure(assoc(o), {a, b, op(m, o, d, e)}));
  // a(b(de)) -> a((bd)e) -> (a(bd))e -> ((ab)d)e
  const Mor bottom = m.compose(
      op(m, o, m.structure(assoc(o), {a, b, d}), m.identity(e)),
      m.compose(m.structure(assoc(o), {a, op(m, o, b, d), e}),
                op(m, o, m.identity(a), m.structure(assoc(o), {b, d, e}))));
  return expect_equal(m, top, bottom, "pentagon");
}

Verdict triangle(Op o, const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const ObjId  a = i.objects.at(0), b = i.objects.at(1);
  const Mor lhs = m.compose(op(m, o, m.structure(runit(o), {a}), m.identity(b)),
                            m.structure(assoc(o), {a, unit(m, o), b}));
  const Mor rhs = op(m, o, m.identity(a), m.structure(lunit(o), {b}));
  return expect_equal(m, lhs, rhs, "triangle");
}

void each_structure_component(const LawContext& c, const Visit& visit) {
  const auto p = pool(c.m, c.options.max_size);
  for (StructureMap s : {StructureMap::AssocSum, StructureMap::LunitSum, StructureMap::RunitSum,
                         StructureMap::AssocProd, StructureMap::LunitProd,
                         StructureMap::RunitProd}) {
    const std::string name = structure_name(s);
    if (structure_arity(s) == 1) {
      for (ObjId a : p)
        if (!visit(Instance{{a}, {}, {name}})) return;
    } else {
      for (ObjId a : p)
        for (ObjId b : p)
          for (ObjId d : p)
            if (!visit(Instance{{a, b, d}, {}, {name}})) return;
    }
  }
}

Verdict structure_invertible(const LawContext& c, const Instance& i) {
  const auto s = parse_structure_name(i.labels.at(0));
  if (!s) throw PreconditionError("unknown structure map " + i.labels.at(0));
  const Mor f = c.m.structure(*s, i.objects);
  if (c.m.inverse(f)) return std::nullopt;
  return i.labels[0] + " component " + c.m.describe(f) + " is not invertible";
}

Verdict initial(const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const ObjId  a = i.objects.at(0);
  const auto&  h = m.hom(m.zero(), a);
  if (h.size() != 1)
    return "hom(" + m.name(m.zero()) + ", " + m.name(a) + ") has " + std::to_string(h.size()) +
           " elements";
  return expect_equal(m, h.front(), m.bang_from_zero(a), "map out of 0");
}

Verdict terminal(const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const ObjId  a = i.objects.at(0);
  const auto&  h = m.hom(a, m.one());
  if (h.size() != 1)
    return "hom(" + m.name(a) + ", " + m.name(m.one()) + ") has " + std::to_string(h.size()) +
           " elements";
  return expect_equal(m, h.front(), m.bang_to_one(a), "map into 1");
}

// n-fold words for the joint epi/mono checks: binary, then both ternary
// bracketings over the smaller pool.
void each_joint(Op o, const LawContext& c, const Visit& visit) {
  const auto p  = pool(c.m, c.options.max_size);
  const auto p3 = pool(c.m, std::min(c.options.max_size, c.options.triple_max_size));
  const std::string w2 = render_word(Word::binary(o, Word::hole(), Word::hole()));
  for (ObjId a : p)
    for (ObjId b : p)
      for (ObjId y : p)
        if (!visit(Instance{{a, b, y}, {}, {w2}})) return;
  for (const Word& w : bracketings(o, 3))
    for (ObjId a : p3)
      for (ObjId b : p3)
        for (ObjId d : p3)
          for (ObjId y : p)
            if (!visit(Instance{{a, b, d, y}, {}, {render_word(w)}})) return;
}

Verdict jointly_epic(const LawContext& c, const Instance& i) {
  const Model&       m = c.m;
  const Word         w = parse_word(i.labels.at(0));
  std::vector<ObjId> xs(i.objects.begin(), i.objects.end() - 1);
  const ObjId        y = i.objects.back();
  const ObjId        s = eval_object(m, w, xs);
  std::vector<Mor>   incl;
  for (std::size_t k = 0; k < xs.size(); ++k) incl.push_back(inclusion(m, w, xs, k));
  std::map<std::vector<Mor>, Mor> seen;
  for (const Mor& f : m.hom(s, y)) {
    std::vector<Mor> key;
    for (const Mor& e : incl) key.push_back(m.compose(f, e));
    auto [it, fresh] = seen.emplace(std::move(key), f);
    if (!fresh)
      return "distinct " + m.describe(it->second) + " and " + m.describe(f) +
             " agree on every inclusion";
  }
  return std::nullopt;
}

Verdict jointly_monic(const LawContext& c, const Instance& i) {
  const Model&       m = c.m;
  const Word         w = parse_word(i.labels.at(0));
  std::vector<ObjId> xs(i.objects.begin(), i.objects.end() - 1);
  const ObjId        y = i.objects.back();
  const ObjId        t = eval_object(m, w, xs);
  std::vector<Mor>   proj;
  for (std::size_t k = 0; k < xs.size(); ++k) proj.push_back(projection(m, w, xs, k));
  std::map<std::vector<Mor>, Mor> seen;
  for (const Mor& f : m.hom(y, t)) {
    std::vector<Mor> key;
    for (const Mor& p : proj) key.push_back(m.compose(p, f));
    auto [it, fresh] = seen.emplace(std::move(key), f);
    if (!fresh)
      return "distinct " + m.describe(it->second) + " and " + m.describe(f) +
             " agree on every projection";
  }
  return std::nullopt;
}

void each_arrow_pair_indexed(const LawContext& c, const Visit& visit) {
  const auto all = arrows(c.m, pool(c.m, c.options.max_size));
  for (const Mor& f : all)
    for (const Mor& g : all)
      for (const char* k : {"0", "1"})
        if (!visit(Instance{{}, {f, g}, {k}})) return;
}

Verdict inclusion_natural(const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const Mor &f = i.morphisms.at(0), &g = i.morphisms.at(1);
  const std::size_t k   = std::stoul(i.labels.at(0));
  const Word        w   = parse_word("(_+_)");
  const ObjId       src[] = {f.dom, g.dom};
  const ObjId       dst[] = {f.cod, g.cod};
  const Mor lhs = m.compose(inclusion(m, w, dst, k), k == 0 ? f : g);
  const Mor rhs = m.compose(m.sum(f, g), inclusion(m, w, src, k));
  return expect_equal(m, lhs, rhs, "inclusion naturality square");
}

Verdict projection_natural(const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const Mor &f = i.morphisms.at(0), &g = i.morphisms.at(1);
  const std::size_t k   = std::stoul(i.labels.at(0));
  const Word        w   = parse_word("(_*_)");
  const ObjId       src[] = {f.dom, g.dom};
  const ObjId       dst[] = {f.cod, g.cod};
  const Mor lhs = m.compose(k == 0 ? f : g, projection(m, w, src, k));
  const Mor rhs = m.compose(projection(m, w, dst, k), m.prod(f, g));
  return expect_equal(m, lhs, rhs, "projection naturality square");
}

// Transformer laws.

Verdict i_natural(const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const Mor &f = i.morphisms.at(0), &g = i.morphisms.at(1);
  return expect_equal(m, m.compose(m.i(f.cod, g.cod), m.sum(f, g)),
                      m.compose(m.prod(f, g), m.i(f.dom, g.dom)), "i naturality square");
}

Verdict compat_runit(const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const ObjId  a = i.objects.at(0);
  const Mor    lhs = m.compose(m.structure(StructureMap::RunitProd, {a}),
                               m.compose(m.prod(m.identity(a), m.j()), m.i(a, m.zero())));
  return expect_equal(m, lhs, m.structure(StructureMap::RunitSum, {a}),
                      "rho* (1*j) i_{A,0} = rho+");
}

Verdict compat_lunit(const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const ObjId  b = i.objects.at(0);
  const Mor    lhs = m.compose(m.structure(StructureMap::LunitProd, {b}),
                               m.compose(m.prod(m.j(), m.identity(b)), m.i(m.zero(), b)));
  return expect_equal(m, lhs, m.structure(StructureMap::LunitSum, {b}),
                      "lambda* (j*1) i_{0,B} = lambda+");
}

Verdict remark_runit(const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const ObjId  a = i.objects.at(0);
  const Mor    lhs = m.compose(m.structure(StructureMap::RunitProd, {a}),
                               m.compose(m.i(a, m.one()), m.sum(m.identity(a), m.j())));
  return expect_equal(m, lhs, m.structure(StructureMap::RunitSum, {a}),
                      "rho* i_{A,1} (1+j) = rho+");
}

Verdict remark_lunit(const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const ObjId  b = i.objects.at(0);
  const Mor    lhs = m.compose(m.structure(StructureMap::LunitProd, {b}),
                               m.compose(m.i(m.one(), b), m.sum(m.j(), m.identity(b))));
  return expect_equal(m, lhs, m.structure(StructureMap::LunitSum, {b}),
                      "lambda* i_{1,B} (j+1) = lambda+");
}

// pi_k i_{A,B} iota_k for the binary words.
Mor diagonal_entry(const Model& m, ObjId a, ObjId b, std::size_t k) {
  static const Word  s = parse_word("(_+_)");
  static const Word  t = parse_word("(_*_)");
  const ObjId        xs[] = {a, b};
  return m.compose(projection(m, t, xs, k), m.compose(m.i(a, b), inclusion(m, s, xs, k)));
}

Verdict lemma_runit_condition(const LawContext& c, const Instance& i) {
  const ObjId a = i.objects.at(0);
  return expect_equal(c.m, diagonal_entry(c.m, a, c.m.zero(), 0), c.m.identity(a),
                      "pi_1 i_{A,0} iota_1 = 1");
}

Verdict lemma_lunit_condition(const LawContext& c, const Instance& i) {
  const ObjId b = i.objects.at(0);
  return expect_equal(c.m, diagonal_entry(c.m, c.m.zero(), b, 1), c.m.identity(b),
                      "pi_2 i_{0,B} iota_2 = 1");
}

bool holds_everywhere(const LawContext& c, const std::string& name) {
  return run(*find_law(name), c).passed;
}

void single(const LawContext&, const Visit& visit) { visit(Instance{}); }

Verdict lemma_implication(const LawContext& c, const Instance&) {
  std::string out;
  if (holds_everywhere(c, "transformer.lemma.runit_condition") &&
      !holds_everywhere(c, "transformer.compatible.runit"))
    out += "runit condition holds but compatibility with rho fails; ";
  if (holds_everywhere(c, "transformer.lemma.lunit_condition") &&
      !holds_everywhere(c, "transformer.compatible.lunit"))
    out += "lunit condition holds but compatibility with lambda fails; ";
  if (out.empty()) return std::nullopt;
  out.resize(out.size() - 2);
  return out;
}

// Prelinear laws.

Verdict identity_matrix_law(const LawContext& c, const Instance& i) {
  const Model&             m = c.m;
  const std::vector<ObjId> xs{i.objects.at(0), i.objects.at(1)};
  static const Word        s = parse_word("(_+_)");
  static const Word        t = parse_word("(_*_)");
  const auto mat = matrix_of(m, m.i(xs[0], xs[1]), s, xs, t, xs);
  const auto id  = identity_matrix(m, xs, s, t);
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l)
      if (mat.entries[k][l] != id.entries[k][l])
        return "entry (" + std::to_string(k) + ", " + std::to_string(l) + ") of i is " +
               m.describe(mat.entries[k][l]) + ", expected " + m.describe(id.entries[k][l]);
  return std::nullopt;
}

Verdict transformer_iff_identity(const LawContext& c, const Instance&) {
  const bool transformer = holds_everywhere(c, "transformer.i.natural") &&
                           holds_everywhere(c, "transformer.compatible.runit") &&
                           holds_everywhere(c, "transformer.compatible.lunit");
  const bool identity = holds_everywhere(c, "prelinear.i.identity_matrix");
  if (transformer == identity) return std::nullopt;
  return std::string("transformer laws ") + (transformer ? "hold" : "fail") +
         " but identity matrices " + (identity ? "hold" : "fail");
}

Verdict zero_absorbs(const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const Mor&   f = i.morphisms.at(0);
  const ObjId  x = i.objects.at(0);
  if (auto v = expect_equal(m, m.compose(f, zero_morphism(m, x, f.dom)),
                            zero_morphism(m, x, f.cod), "f z = z"))
    return v;
  return expect_equal(m, m.compose(zero_morphism(m, f.cod, x), f), zero_morphism(m, f.dom, x),
                      "z f = z");
}

void each_arrow_and_object(const LawContext& c, const Visit& visit) {
  const auto p = pool(c.m, c.options.max_size);
  for (const Mor& f : arrows(c.m, p))
    for (ObjId x : p)
      if (!visit(Instance{{x}, {f}, {}})) return;
}

std::set<Mor> through(const Model& m, ObjId x, ObjId u, ObjId y) {
  std::set<Mor> out;
  for (const Mor& a : m.hom(x, u))
    for (const Mor& b : m.hom(u, y)) out.insert(m.compose(b, a));
  return out;
}

Verdict zero_unique(const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const ObjId  x = i.objects.at(0), y = i.objects.at(1);
  const auto   a = through(m, x, m.one(), y);
  const auto   b = through(m, x, m.zero(), y);
  std::vector<Mor> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  const Mor z = zero_morphism(m, x, y);
  if (both.size() == 1 && both.front() == z) return std::nullopt;
  return std::to_string(both.size()) + " morphisms " + m.name(x) + " -> " + m.name(y) +
         " factor through both units";
}

template <typename F>
Fn with(Op o, F f) {
  return [o, f](const LawContext& c, const Instance& i) { return f(o, c, i); };
}

std::vector<Law> build_structure() {
  std::vector<Law> laws{
      {"category.identity", each_arrow,
       [](const LawContext& c, const Instance& i) -> Verdict {
         const Mor& f = i.morphisms.at(0);
         if (auto v = expect_equal(c.m, c.m.compose(f, c.m.identity(f.dom)), f, "f 1 = f"))
           return v;
         return expect_equal(c.m, c.m.compose(c.m.identity(f.cod), f), f, "1 f = f");
       }},
      {"category.associativity", each_composable_triple,
       [](const LawContext& c, const Instance& i) -> Verdict {
         const Model& m = c.m;
         const Mor &f = i.morphisms.at(0), &g = i.morphisms.at(1), &h = i.morphisms.at(2);
         return expect_equal(m, m.compose(h, m.compose(g, f)), m.compose(m.compose(h, g), f),
                             "h(gf) = (hg)f");
       }},
  };
  for (Op o : {Op::Sum, Op::Prod}) {
    const std::string t = tag(o);
    laws.push_back({t + ".functor.identity", each_pair, with(o, functor_identity)});
    laws.push_back({t + ".functor.composition", each_two_composable_pairs,
                    with(o, functor_composition)});
    laws.push_back({t + ".assoc.natural", each_arrow_triple, with(o, assoc_natural)});
    laws.push_back({t + ".lunit.natural", each_arrow, with(o, lunit_natural)});
    laws.push_back({t + ".runit.natural", each_arrow, with(o, runit_natural)});
    laws.push_back({t + ".pentagon", each_quad, with(o, pentagon)});
    laws.push_back({t + ".triangle", each_pair, with(o, triangle)});
  }
  laws.push_back({"structure.invertible", each_structure_component, structure_invertible});
  laws.push_back({"zero.initial", each_object, initial});
  laws.push_back({"one.terminal", each_object, terminal});
  laws.push_back({"sum.inclusions.jointly_epic",
                  [](const LawContext& c, const Visit& v) { each_joint(Op::Sum, c, v); },
                  jointly_epic});
  laws.push_back({"prod.projections.jointly_monic",
                  [](const LawContext& c, const Visit& v) { each_joint(Op::Prod, c, v); },
                  jointly_monic});
  laws.push_back({"sum.inclusions.natural", each_arrow_pair_indexed, inclusion_natural});
  laws.push_back({"prod.projections.natural", each_arrow_pair_indexed, projection_natural});
  return laws;
}

}  // namespace

const std::vector<Law>& structure_laws() {
  static const std::vector<Law> laws = build_structure();
  return laws;
}

const std::vector<Law>& transformer_laws() {
  static const std::vector<Law> laws{
      {"transformer.i.natural", each_arrow_pair, i_natural},
      {"transformer.compatible.runit", each_object, compat_runit},
      {"transformer.compatible.lunit", each_object, compat_lunit},
      {"transformer.remark.runit", each_object, remark_runit},
      {"transformer.remark.lunit", each_object, remark_lunit},
      {"transformer.lemma.runit_condition", each_object, lemma_runit_condition},
      {"transformer.lemma.lunit_condition", each_object, lemma_lunit_condition},
      {"transformer.lemma.implies_compatibility", single, lemma_implication},
  };
  return laws;
}

const std::vector<Law>& prelinear_laws() {
  static const std::vector<Law> laws{
      {"prelinear.i.identity_matrix", each_pair, identity_matrix_law},
      {"prelinear.transformer_iff_identity_matrix", single, transformer_iff_identity},
      {"pointed.zero.absorbs", each_arrow_and_object, zero_absorbs},
      {"pointed.zero.unique", each_pair, zero_unique},
  };
  return laws;
}

}  // namespace detail

namespace {

std::vector<CheckReport> run_suite(const std::vector<detail::Law>& laws, const Model& m,
                                   const CheckOptions& options) {
  const detail::LawContext ctx{m, options};
  std::vector<CheckReport> out;
  for (const auto& law : laws) out.push_back(detail::run(law, ctx));
  return out;
}

}  // namespace

std::vector<CheckReport> check_structure(const Model& m, const CheckOptions& options) {
  return run_suite(detail::structure_laws(), m, options);
}

std::vector<CheckReport> check_transformer(const Model& m, const CheckOptions& options) {
  return run_suite(detail::transformer_laws(), m, options);
}

std::vector<CheckReport> check_prelinear(const Model& m, const CheckOptions& options) {
  return run_suite(detail::prelinear_laws(), m, options);
}

LineariserResult is_lineariser(const Model& m, std::size_t max_size) {
  LineariserResult out;
  const auto       p = detail::pool(m, max_size);
  for (ObjId a : p) {
    for (ObjId b : p) {
      const Mor  f  = m.i(a, b);
      const auto nd = m.carrier_size(f.dom), nc = m.carrier_size(f.cod);
      std::optional<Mor> inv = m.inverse(f);
      if (inv && m.compose(*inv, f) == m.identity(f.dom) &&
          m.compose(f, *inv) == m.identity(f.cod)) {
        out.inverses.emplace_back(a, b, std::move(*inv));
        continue;
      }
      out.value   = false;
      out.witness = std::make_pair(a, b);
      std::set<int> image(f.map.begin(), f.map.end());
      std::string   why;
      if (image.size() < nc)
        why = "i not surjective at (" + m.name(a) + ", " + m.name(b) + ")";
      else if (image.size() < nd)
        why = "i not injective at (" + m.name(a) + ", " + m.name(b) + ")";
      else
        why = "i at (" + m.name(a) + ", " + m.name(b) + ") has no inverse morphism";
      out.reason = why + ": |" + m.name(f.dom) + "| = " + std::to_string(nd) + ", |" +
                   m.name(f.cod) + "| = " + std::to_string(nc);
      out.inverses.clear();
      return out;
    }
  }
  return out;
}

std::vector<std::string> law_names() {
  std::vector<std::string> out;
  for (const auto* suite : {&detail::structure_laws(), &detail::transformer_laws(),
                            &detail::prelinear_laws(), &detail::centrality_laws(),
                            &detail::coherence_laws(), &detail::coherence_sweep_laws()})
    for (const auto& law : *suite) out.push_back(law.name);
  return out;
}

bool is_law(const std::string& name) { return detail::find_law(name) != nullptr; }

std::optional<std::string> replay(const Model& m, const Counterexample& c,
                                  const CheckOptions& options) {
  const detail::Law* law = detail::find_law(c.law);
  if (!law) throw PreconditionError("unknown law: " + c.law);
  const detail::LawContext ctx{m, options};
  try {
    return law->check(ctx, c.instance);
  } catch (const IntegrityError& e) {
    return std::string("integrity failure: ") + e.what();
  }
}

CheckReport run_law(const Model& m, const std::string& name, const CheckOptions& options) {
  const detail::Law* law = detail::find_law(name);
  if (!law) throw PreconditionError("unknown law: " + name);
  return detail::run(*law, detail::LawContext{m, options});
}

}  // namespace plcat
