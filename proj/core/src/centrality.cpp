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

#include "plcat/centrality.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "laws.hpp"
#include "plcat/eval.hpp"

namespace plcat {
namespace {

const Word& binary_sum() {
  static const Word w = parse_word("(_+_)");
  return w;
}
const Word& binary_prod() {
  static const Word w = parse_word("(_*_)");
  return w;
}

bool restricts_to(const Mor& h, const Mor& iota, const Mor& f) {
  for (std::size_t x = 0; x < iota.map.size(); ++x)
    if (h.map[iota.map[x]] != f.map[x]) return false;
  return true;
}

bool projects_to(const Mor& pi, const Mor& h, const Mor& f) {
  for (std::size_t x = 0; x < h.map.size(); ++x)
    if (pi.map[h.map[x]] != f.map[x]) return false;
  return true;
}

constexpr std::size_t kAllObjects = std::numeric_limits<std::size_t>::max();

void require_lineariser(const Model& m) {
  const auto l = is_lineariser(m, kAllObjects);
  if (!l.value) throw LineariserRequired(l.reason);
}

// add_central without the model-wide lineariser check.
Mor add_unchecked(const Model& m, const Mor& f, const Mor& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw PreconditionError("cannot add " + m.describe(f) + " and " + m.describe(g) +
                            ": not parallel");
  const ObjId x = f.dom, y = f.cod;
  const auto  mf = realize(m, central_matrix(m, f));
  const auto  mg = realize(m, central_matrix(m, g));
  if (!mf) throw PreconditionError(m.describe(f) + " is not central");
  if (!mg) throw PreconditionError(m.describe(g) + " is not central");
  const auto inv = m.inverse(m.i(y, x));
  if (!inv)
    throw LineariserRequired("i not invertible at (" + m.name(y) + ", " + m.name(x) + ")");
  const Mor composite = m.compose(*mg, m.compose(*inv, *mf));
  const std::vector<ObjId> yx{y, x};
  const auto mat = matrix_of(m, composite, binary_sum(), yx, binary_prod(), yx);
  if (mat.entries[0][0] != m.identity(y) || mat.entries[1][1] != m.identity(x) ||
      mat.entries[1][0] != zero_morphism(m, y, x))
    throw IntegrityError("composite for " + m.describe(f) + " + " + m.describe(g) +
                         " is not of the form [[1, h], [z, 1]]");
  return mat.entries[0][1];
}

// Per-run memo for the default addition.
Addition memoized_addition() {
  struct Memo {
    std::mutex                         mutex;
    std::map<std::pair<Mor, Mor>, Mor> sums;
  };
  auto memo = std::make_shared<Memo>();
  return [memo](const Model& m, const Mor& f, const Mor& g) {
    {
      std::lock_guard lock(memo->mutex);
      if (auto it = memo->sums.find({f, g}); it != memo->sums.end()) return it->second;
    }
    Mor h = add_unchecked(m, f, g);
    std::lock_guard lock(memo->mutex);
    memo->sums.emplace(std::make_pair(f, g), h);
    return h;
  };
}

Addition addition_of(const CheckOptions& options) {
  return options.addition ? options.addition : memoized_addition();
}

}  // namespace

LineariserRequired::LineariserRequired(const std::string& reason)
    : std::runtime_error("addition requires a lineariser: " + reason) {}

std::optional<CoverWitness> covers_sum(const Model& m, const Mor& f, const Mor& g) {
  if (f.cod != g.cod)
    throw PreconditionError("covers_sum needs a common codomain: " + m.describe(f) + ", " +
                            m.describe(g));
  const std::vector<ObjId> xs{f.dom, g.dom};
  const Mor  i1 = inclusion(m, binary_sum(), xs, 0);
  const Mor  i2 = inclusion(m, binary_sum(), xs, 1);
  std::optional<CoverWitness> out;
  for (const Mor& h : m.hom(m.sum(f.dom, g.dom), f.cod)) {
    if (!restricts_to(h, i1, f) || !restricts_to(h, i2, g)) continue;
    if (out)
      throw IntegrityError("two cover witnesses: " + m.describe(out->h) + " and " +
                           m.describe(h));
    out = CoverWitness{f, g, h};
  }
  return out;
}

std::optional<CoverWitness> covers_prod(const Model& m, const Mor& f, const Mor& g) {
  if (f.dom != g.dom)
    throw PreconditionError("covers_prod needs a common domain: " + m.describe(f) + ", " +
                            m.describe(g));
  const std::vector<ObjId> ys{f.cod, g.cod};
  const Mor  p1 = projection(m, binary_prod(), ys, 0);
  const Mor  p2 = projection(m, binary_prod(), ys, 1);
  std::optional<CoverWitness> out;
  for (const Mor& h : m.hom(f.dom, m.prod(f.cod, g.cod))) {
    if (!projects_to(p1, h, f) || !projects_to(p2, h, g)) continue;
    if (out)
      throw IntegrityError("two co-cover witnesses: " + m.describe(out->h) + " and " +
                           m.describe(h));
    out = CoverWitness{f, g, h};
  }
  return out;
}

Centrality is_central(const Model& m, const Mor& f) {
  Centrality c;
  c.sum_witness  = covers_sum(m, f, m.identity(f.cod));
  c.prod_witness = covers_prod(m, f, m.identity(f.dom));
  c.central      = c.sum_witness && c.prod_witness;
  return c;
}

MatrixPresentation central_matrix(const Model& m, const Mor& f) {
  const ObjId x = f.dom, y = f.cod;
  return make_matrix(m, binary_sum(), {y, x}, binary_prod(), {y, x},
                     {{m.identity(y), f}, {zero_morphism(m, y, x), m.identity(x)}});
}

bool is_central_matrix(const Model& m, const Mor& f) {
  return realize(m, central_matrix(m, f)).has_value();
}

std::vector<Mor> central_hom(const Model& m, ObjId x, ObjId y) {
  std::vector<Mor> out;
  for (const Mor& f : m.hom(x, y))
    if (is_central(m, f).central) out.push_back(f);
  return out;
}

Mor add_central(const Model& m, const Mor& f, const Mor& g) {
  require_lineariser(m);
  return add_unchecked(m, f, g);
}

Addition corrupted_addition(Mor f, Mor g, Mor result) {
  Addition base = memoized_addition();
  return [=](const Model& m, const Mor& a, const Mor& b) {
    if (a == f && b == g) return result;
    return base(m, a, b);
  };
}

CentralMonoid central_monoid(const Model& m, ObjId x, ObjId y, const Addition& add) {
  require_lineariser(m);
  const Addition plus = add ? add : memoized_addition();
  CentralMonoid  z;
  z.x        = x;
  z.y        = y;
  z.elements = central_hom(m, x, y);
  const auto zero = zero_morphism(m, x, y);
  auto index = [&](const Mor& f) -> std::size_t {
    auto it = std::find(z.elements.begin(), z.elements.end(), f);
    if (it == z.elements.end())
      throw IntegrityError("sum " + m.describe(f) + " is not central");
    return static_cast<std::size_t>(it - z.elements.begin());
  };
  z.unit = index(zero);
  for (const Mor& f : z.elements) {
    z.table.emplace_back();
    for (const Mor& g : z.elements) z.table.back().push_back(index(plus(m, f, g)));
  }
  for (std::size_t a = 0; a < z.elements.size(); ++a)
    for (std::size_t b = 0; b < z.elements.size(); ++b)
      if (z.table[a][b] != z.table[b][a]) z.commutative = false;
  return z;
}

std::string render_addition_table(const Model& m, const CentralMonoid& z) {
  std::ostringstream os;
  os << "Z(" << m.name(z.x) << ", " << m.name(z.y) << "): " << z.elements.size()
     << " central morphisms\n";
  for (std::size_t k = 0; k < z.elements.size(); ++k) {
    os << "  " << k << ": [";
    for (std::size_t e = 0; e < z.elements[k].map.size(); ++e)
      os << (e ? " " : "") << z.elements[k].map[e];
    os << ']' << (k == z.unit ? "  (zero)" : "") << '\n';
  }
  const std::size_t w = std::to_string(z.elements.size()).size();
  auto pad = [w](std::size_t v) {
    std::string s = std::to_string(v);
    return std::string(w - s.size(), ' ') + s;
  };
  os << "  " << std::string(w, ' ') << " +";
  for (std::size_t b = 0; b < z.elements.size(); ++b) os << ' ' << pad(b);
  os << '\n';
  for (std::size_t a = 0; a < z.elements.size(); ++a) {
    os << "  " << pad(a) << " |";
    for (std::size_t b = 0; b < z.elements.size(); ++b) os << ' ' << pad(z.table[a][b]);
    os << '\n';
  }
  return os.str();
}

namespace detail {
namespace {

Instance mors_of(const Mor& f, const Mor& g, const Mor& h) { return Instance{{}, {f, g, h}, {}}; }

Addition context_addition(const LawContext& c) {
  return c.options.addition ? c.options.addition : memoized_addition();
}

void each_central_pair_elements(const LawContext& c, std::size_t arity, const Visit& visit) {
  const auto p = pool(c.m, c.options.max_size);
  for (ObjId x : p)
    for (ObjId y : p) {
      const auto z = central_hom(c.m, x, y);
      std::vector<std::size_t> idx(arity, 0);
      if (z.empty()) continue;
      while (true) {
        Instance inst;
        for (std::size_t k : idx) inst.morphisms.push_back(z[k]);
        if (!visit(inst)) return;
        std::size_t d = 0;
        while (d < arity && ++idx[d] == z.size()) idx[d++] = 0;
        if (d == arity) break;
      }
    }
}

Verdict closure(const LawContext& c, const Instance& i) {
  const Model& m   = c.m;
  const Mor    sum = context_addition(c)(m, i.morphisms.at(0), i.morphisms.at(1));
  if (sum.dom != i.morphisms[0].dom || sum.cod != i.morphisms[0].cod)
    return "sum " + m.describe(sum) + " has the wrong type";
  if (!is_central(m, sum).central) return "sum " + m.describe(sum) + " is not central";
  return std::nullopt;
}

Verdict associativity(const LawContext& c, const Instance& i) {
  const Model& m   = c.m;
  const auto   add = context_addition(c);
  const Mor &f = i.morphisms.at(0), &g = i.morphisms.at(1), &h = i.morphisms.at(2);
  return expect_equal(m, add(m, add(m, f, g), h), add(m, f, add(m, g, h)),
                      "(f+g)+h = f+(g+h)");
}

Verdict unit_law(const LawContext& c, const Instance& i) {
  const Model& m   = c.m;
  const auto   add = context_addition(c);
  const Mor&   f   = i.morphisms.at(0);
  const Mor    z   = zero_morphism(m, f.dom, f.cod);
  if (auto v = expect_equal(m, add(m, f, z), f, "f+z = f")) return v;
  return expect_equal(m, add(m, z, f), f, "z+f = f");
}

// f + g = nabla o i^-1 o (f*g) o delta, with delta : X -> X*X and
// nabla : Y+Y -> Y the (co)diagonals.
Verdict codiagonal(const LawContext& c, const Instance& i) {
  const Model& m = c.m;
  const Mor &f = i.morphisms.at(0), &g = i.morphisms.at(1);
  const auto delta = covers_prod(m, m.identity(f.dom), m.identity(f.dom));
  const auto nabla = covers_sum(m, m.identity(f.cod), m.identity(f.cod));
  if (!delta) return "no diagonal on " + m.name(f.dom);
  if (!nabla) return "no codiagonal on " + m.name(f.cod);
  const auto inv = m.inverse(m.i(f.cod, f.cod));
  if (!inv) return "i is not invertible at (" + m.name(f.cod) + ", " + m.name(f.cod) + ")";
  const Mor expected =
      m.compose(nabla->h, m.compose(*inv, m.compose(m.prod(f, g), delta->h)));
  return expect_equal(m, context_addition(c)(m, f, g), expected,
                      "f+g = nabla i^-1 (f*g) delta");
}

// f, g : X -> Y and h : Y -> W (left) or h : W -> X (right), all central.
void each_distributive(bool left, const LawContext& c, const Visit& visit) {
  const auto p = pool(c.m, c.options.max_size);
  std::map<std::pair<ObjId, ObjId>, std::vector<Mor>> zs;
  for (ObjId a : p)
    for (ObjId b : p) zs[{a, b}] = central_hom(c.m, a, b);
  for (ObjId x : p)
    for (ObjId y : p)
      for (ObjId w : p) {
        const auto& fs = zs[{x, y}];
        const auto& hs = left ? zs[{y, w}] : zs[{w, x}];
        for (const Mor& f : fs)
          for (const Mor& g : fs)
            for (const Mor& h : hs)
              if (!visit(mors_of(f, g, h))) return;
      }
}

Verdict distributes_left(const LawContext& c, const Instance& i) {
  const Model& m   = c.m;
  const auto   add = context_addition(c);
  const Mor &f = i.morphisms.at(0), &g = i.morphisms.at(1), &h = i.morphisms.at(2);
  return expect_equal(m, m.compose(h, add(m, f, g)), add(m, m.compose(h, f), m.compose(h, g)),
                      "h(f+g) = hf+hg");
}

Verdict distributes_right(const LawContext& c, const Instance& i) {
  const Model& m   = c.m;
  const auto   add = context_addition(c);
  const Mor &f = i.morphisms.at(0), &g = i.morphisms.at(1), &h = i.morphisms.at(2);
  return expect_equal(m, m.compose(add(m, f, g), h), add(m, m.compose(f, h), m.compose(g, h)),
                      "(f+g)h = fh+gh");
}

Verdict characterization(const LawContext& c, const Instance& i) {
  const Mor& f      = i.morphisms.at(0);
  const bool cover  = is_central(c.m, f).central;
  const bool matrix = is_central_matrix(c.m, f);
  if (cover == matrix) return std::nullopt;
  return c.m.describe(f) + (cover ? " is central but its matrix is not realized"
                                  : " is not central but its matrix is realized");
}

Verdict zero_central(const LawContext& c, const Instance& i) {
  const Mor z = zero_morphism(c.m, i.objects.at(0), i.objects.at(1));
  if (is_central(c.m, z).central) return std::nullopt;
  return "zero morphism " + c.m.describe(z) + " is not central";
}

// Every matrix from X1+X2 to Y1*Y2 has a realizer.  Realizers are unique
// (joint epi/mono), so this is a count: distinct matrices of hom(S, T) vs
// the product of the entry hom sizes.
Verdict matrices_realizable(const LawContext& c, const Instance& i) {
  const Model&             m = c.m;
  const std::vector<ObjId> xs{i.objects.at(0), i.objects.at(1)};
  const std::vector<ObjId> ys{i.objects.at(2), i.objects.at(3)};
  std::vector<Mor>         incl, proj;
  for (std::size_t k = 0; k < 2; ++k) {
    incl.push_back(inclusion(m, binary_sum(), xs, k));
    proj.push_back(projection(m, binary_prod(), ys, k));
  }
  std::set<std::vector<Mor>> seen;
  for (const Mor& h : m.hom(m.sum(xs[0], xs[1]), m.prod(ys[0], ys[1]))) {
    std::vector<Mor> key;
    for (const Mor& p : proj)
      for (const Mor& e : incl) key.push_back(m.compose(p, m.compose(h, e)));
    seen.insert(std::move(key));
  }
  std::size_t expected = 1;
  for (ObjId y : ys)
    for (ObjId x : xs) expected *= m.hom(x, y).size();
  if (seen.size() == expected) return std::nullopt;
  return std::to_string(expected - seen.size()) + " of " + std::to_string(expected) +
         " matrices " + m.name(m.sum(xs[0], xs[1])) + " -> " +
         m.name(m.prod(ys[0], ys[1])) + " have no realizer";
}

void each_pair_objects(const LawContext& c, const Visit& visit) {
  const auto p = pool(c.m, c.options.max_size);
  for (ObjId a : p)
    for (ObjId b : p)
      if (!visit(Instance{{a, b}, {}, {}})) return;
}

void each_arrow_of_pool(const LawContext& c, const Visit& visit) {
  for (const Mor& f : arrows(c.m, pool(c.m, c.options.max_size)))
    if (!visit(Instance{{}, {f}, {}})) return;
}

void each_quad_objects(const LawContext& c, const Visit& visit) {
  const auto p = pool(c.m, c.options.max_size);
  for (ObjId a : p)
    for (ObjId b : p)
      for (ObjId d : p)
        for (ObjId e : p)
          if (!visit(Instance{{a, b, d, e}, {}, {}})) return;
}

}  // namespace

const std::vector<Law>& centrality_laws() {
  static const std::vector<Law> laws{
      {"central.characterization", each_arrow_of_pool, characterization},
      {"central.zero", each_pair_objects, zero_central},
      {"monoid.closure",
       [](const LawContext& c, const Visit& v) { each_central_pair_elements(c, 2, v); },
       closure},
      {"monoid.associativity",
       [](const LawContext& c, const Visit& v) { each_central_pair_elements(c, 3, v); },
       associativity},
      {"monoid.unit",
       [](const LawContext& c, const Visit& v) { each_central_pair_elements(c, 1, v); },
       unit_law},
      {"monoid.codiagonal",
       [](const LawContext& c, const Visit& v) { each_central_pair_elements(c, 2, v); },
       codiagonal},
      {"distributivity.left",
       [](const LawContext& c, const Visit& v) { each_distributive(true, c, v); },
       distributes_left},
      {"distributivity.right",
       [](const LawContext& c, const Visit& v) { each_distributive(false, c, v); },
       distributes_right},
      {"linearity.matrices_realizable", each_quad_objects, matrices_realizable},
  };
  return laws;
}

}  // namespace detail

namespace {

std::vector<CheckReport> run_named(const Model& m, const CheckOptions& options,
                                   std::initializer_list<const char*> names) {
  CheckOptions opts = options;
  opts.addition     = addition_of(options);
  std::vector<CheckReport> out;
  for (const char* name : names) out.push_back(run_law(m, name, opts));
  return out;
}

}  // namespace

std::vector<CheckReport> check_monoid_laws(const Model& m, const CheckOptions& options) {
  require_lineariser(m);
  return run_named(m, options, {"monoid.closure", "monoid.associativity", "monoid.unit",
                                   "monoid.codiagonal"});
}

std::vector<CheckReport> check_distributivity(const Model& m, const CheckOptions& options) {
  require_lineariser(m);
  return run_named(m, options, {"distributivity.left", "distributivity.right"});
}

std::vector<CheckReport> check_centrality(const Model& m, const CheckOptions& options) {
  return run_named(m, options, {"central.characterization", "central.zero"});
}

LinearityReport check_linearity_theorem(const Model& m, const CheckOptions& options) {
  LinearityReport out;
  const auto      lin   = is_lineariser(m, options.max_size);
  out.lineariser        = lin.value;
  out.lineariser_reason = lin.reason;
  auto realizable       = run_law(m, "linearity.matrices_realizable", options);
  out.matrices_realizable = realizable.passed;
  out.details.push_back(std::move(realizable));

  CheckReport& r = out.report;
  r.law          = "linearity.theorem";
  r.instances    = 1;
  if (!lin.value) {
    // The addition needs i^-1 at (Y, X); show it fails at the witness.
    const auto [a, b] = *lin.witness;
    try {
      (void)add_central(m, zero_morphism(m, b, a), zero_morphism(m, b, a));
      out.addition_definable = true;
      r.note = "addition defined although i is not invertible";
    } catch (const LineariserRequired& e) {
      out.addition_definable = false;
      r.note = std::string("addition undefined: ") + e.what();
    }
  } else {
    out.addition_definable = true;
    CheckOptions opts      = options;
    opts.addition          = addition_of(options);
    for (auto& rep : check_monoid_laws(m, opts)) out.details.push_back(std::move(rep));
    for (auto& rep : check_distributivity(m, opts)) out.details.push_back(std::move(rep));
    out.monoids_distributive =
        std::all_of(out.details.begin() + 1, out.details.end(),
                    [](const CheckReport& c) { return c.passed; });
  }
  r.passed = out.left() == out.right();
  if (!r.passed) {
    r.failures = 1;
    r.counterexample =
        Counterexample{r.law, Instance{},
                       std::string("left side ") + (out.left() ? "holds" : "fails") +
                           ", right side " + (out.right() ? "holds" : "fails")};
  }
  return out;
}

}  // namespace plcat
