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

#include "plcat/model.hpp"

#include "plcat/word.hpp"

#include <algorithm>
#include <sstream>

namespace plcat {

std::size_t MorHash::operator()(const Mor& f) const noexcept {
  std::size_t h = (static_cast<std::size_t>(f.dom) << 32) ^ f.cod;
  for (int v : f.map) h = h * 1000003u ^ static_cast<std::size_t>(v);
  return h;
}

std::size_t structure_arity(StructureMap map) {
  switch (map) {
    case StructureMap::AssocSum:
    case StructureMap::AssocProd: return 3;
    case StructureMap::I: return 2;
    default: return 1;
  }
}

std::string structure_name(StructureMap map) {
  switch (map) {
    case StructureMap::AssocSum: return "assoc_sum";
    case StructureMap::LunitSum: return "lunit_sum";
    case StructureMap::RunitSum: return "runit_sum";
    case StructureMap::AssocProd: return "assoc_prod";
    case StructureMap::LunitProd: return "lunit_prod";
    case StructureMap::RunitProd: return "runit_prod";
    case StructureMap::I: return "i";
  }
  return "?";
}

std::optional<StructureMap> parse_structure_name(std::string_view name) {
  for (auto m : {StructureMap::AssocSum, StructureMap::LunitSum, StructureMap::RunitSum,
                 StructureMap::AssocProd, StructureMap::LunitProd,
                 StructureMap::RunitProd, StructureMap::I})
    if (structure_name(m) == name) return m;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Model

ObjId Model::add_base(ObjectRecord rec) {
  std::unique_lock lock(mutex_);
  rec.shape     = Shape::Base;
  const auto id = static_cast<ObjId>(records_.size());
  records_.push_back(std::move(rec));
  if (id == 0) unit_ = id;
  base_.push_back(id);
  return id;
}

void Model::hide_unit() {
  std::unique_lock lock(mutex_);
  base_.erase(std::remove(base_.begin(), base_.end(), unit_), base_.end());
}

const Model::ObjectRecord& Model::record(ObjId x) const {
  std::shared_lock lock(mutex_);
  if (x >= records_.size()) throw ModelError("unknown object id " + std::to_string(x));
  return records_[x];
}

std::size_t Model::object_count() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

std::optional<ObjId> Model::find(std::string_view name) const {
  std::shared_lock lock(mutex_);
  for (ObjId x : base_)
    if (records_[x].name == name) return x;
  if (!records_.empty() && records_[unit_].name == name) return unit_;
  return std::nullopt;
}

std::string Model::name(ObjId x) const {
  const auto& r = record(x);
  switch (r.shape) {
    case Shape::Base: return r.name;
    case Shape::Sum: return "(" + name(r.a) + "+" + name(r.b) + ")";
    case Shape::Prod: return "(" + name(r.a) + "*" + name(r.b) + ")";
  }
  return r.name;
}

std::size_t Model::carrier_size(ObjId x) const { return record(x).size; }

ObjId Model::sum(ObjId a, ObjId b) const { return make_sum(a, b); }
ObjId Model::prod(ObjId a, ObjId b) const { return make_prod(a, b); }

Mor Model::identity(ObjId x) const {
  Mor f{x, x, std::vector<int>(carrier_size(x))};
  for (std::size_t k = 0; k < f.map.size(); ++k) f.map[k] = static_cast<int>(k);
  return f;
}

Mor Model::compose(const Mor& g, const Mor& f) const {
  if (f.cod != g.dom)
    throw ModelError("cannot compose " + describe(g) + " after " + describe(f));
  Mor h{f.dom, g.cod, std::vector<int>(f.map.size())};
  for (std::size_t k = 0; k < f.map.size(); ++k) h.map[k] = g.map[f.map[k]];
  return h;
}

Mor Model::sum(const Mor& f, const Mor& g) const {
  return Mor{sum(f.dom, g.dom), sum(f.cod, g.cod), sum_table(f, g)};
}

Mor Model::prod(const Mor& f, const Mor& g) const {
  return Mor{prod(f.dom, g.dom), prod(f.cod, g.cod), prod_table(f, g)};
}

bool Model::is_morphism(ObjId dom, ObjId cod, std::span<const int> map) const {
  if (map.size() != carrier_size(dom)) return false;
  const auto n = static_cast<int>(carrier_size(cod));
  for (int v : map)
    if (v < 0 || v >= n) return false;
  return preserves_structure(dom, cod, map);
}

const std::vector<Mor>& Model::hom(ObjId dom, ObjId cod) const {
  const auto key = std::make_pair(dom, cod);
  {
    std::shared_lock lock(mutex_);
    if (auto it = homs_.find(key); it != homs_.end()) return it->second;
  }
  auto homs = enumerate_hom(dom, cod);
  std::sort(homs.begin(), homs.end());
  std::unique_lock lock(mutex_);
  return homs_.emplace(key, std::move(homs)).first->second;
}

Mor Model::structure(StructureMap map, std::span<const ObjId> args) const {
  if (args.size() != structure_arity(map))
    throw ModelError("structure map " + structure_name(map) + " takes " +
                     std::to_string(structure_arity(map)) + " objects");
  StructureKey key{map, std::vector<ObjId>(args.begin(), args.end())};
  {
    std::shared_lock lock(mutex_);
    if (auto it = overrides_.find(key); it != overrides_.end()) return it->second;
    if (auto it = structure_cache_.find(key); it != structure_cache_.end())
      return it->second;
  }
  Mor f = compute_structure(map, args);
  std::unique_lock lock(mutex_);
  structure_cache_.emplace(std::move(key), f);
  return f;
}

Mor Model::structure_inverse(StructureMap map, std::span<const ObjId> args) const {
  Mor  f   = structure(map, args);
  auto inv = inverse(f);
  if (!inv)
    throw IntegrityError("structure component " + structure_name(map) + " " +
                         describe(f) + " is not invertible");
  return *inv;
}

Mor Model::bang_from_zero(ObjId x) const { return Mor{zero(), x, {0}}; }

Mor Model::bang_to_one(ObjId x) const {
  return Mor{x, one(), std::vector<int>(carrier_size(x), 0)};
}

std::optional<Mor> Model::inverse(const Mor& f) const {
  const std::size_t n = carrier_size(f.cod);
  if (f.map.size() != n) return std::nullopt;
  std::vector<int> inv(n, -1);
  for (std::size_t k = 0; k < n; ++k) {
    if (inv[f.map[k]] != -1) return std::nullopt;
    inv[f.map[k]] = static_cast<int>(k);
  }
  if (!is_morphism(f.cod, f.dom, inv)) return std::nullopt;
  return Mor{f.cod, f.dom, std::move(inv)};
}

void Model::set_override(StructureMap map, std::vector<ObjId> args,
                         std::vector<int> table) {
  for (ObjId x : args)
    if (std::find(base_.begin(), base_.end(), x) == base_.end() && x != unit_)
      throw ModelError("overrides may only name base objects");
  const Mor reference = compute_structure(map, args);
  if (!is_morphism(reference.dom, reference.cod, table))
    throw ModelError("override for " + structure_name(map) + " is not a morphism " +
                     name(reference.dom) + " -> " + name(reference.cod));
  Mor replacement{reference.dom, reference.cod, std::move(table)};
  if (map != StructureMap::I && !inverse(replacement))
    throw ModelError("override for " + structure_name(map) + " is not invertible");
  std::unique_lock lock(mutex_);
  structure_cache_.clear();
  overrides_[{map, std::move(args)}] = std::move(replacement);
}

bool Model::has_overrides() const {
  std::shared_lock lock(mutex_);
  return !overrides_.empty();
}

std::string Model::describe(const Mor& f) const {
  std::ostringstream out;
  out << name(f.dom) << "->" << name(f.cod) << " [";
  for (std::size_t k = 0; k < f.map.size(); ++k) out << (k ? "," : "") << f.map[k];
  out << "]";
  return out.str();
}

// ---------------------------------------------------------------------------
// Pointed sets

namespace {

// Wedge numbering with a left summand of `left_size` elements.
int wedge_inject(Side side, int x, std::size_t left_size) {
  if (x == 0) return 0;
  return side == Side::Left ? x : static_cast<int>(left_size) - 1 + x;
}

std::pair<Side, int> wedge_split(int e, std::size_t left_size) {
  if (e == 0) return {Side::Left, 0};
  if (static_cast<std::size_t>(e) < left_size) return {Side::Left, e};
  return {Side::Right, e - static_cast<int>(left_size) + 1};
}

}  // namespace

PointedSets::PointedSets(std::vector<std::size_t> sizes) {
  add_base({.name = "P1", .size = 1});
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  for (std::size_t n : sizes) {
    if (n == 0) throw ModelError("pointed sets have at least one element");
    if (n == 1) continue;
    add_base({.name = "P" + std::to_string(n), .size = n});
  }
  if (sizes.empty() || sizes.front() != 1) {
    hide_unit();
  }
}

std::unique_ptr<PointedSets> PointedSets::up_to(std::size_t max_size) {
  std::vector<std::size_t> sizes;
  for (std::size_t n = 1; n <= max_size; ++n) sizes.push_back(n);
  return std::make_unique<PointedSets>(std::move(sizes));
}

ObjId PointedSets::make_sum(ObjId a, ObjId b) const {
  return intern(Shape::Sum, a, b, [&] {
    return ObjectRecord{.size = carrier_size(a) + carrier_size(b) - 1};
  });
}

ObjId PointedSets::make_prod(ObjId a, ObjId b) const {
  return intern(Shape::Prod, a, b,
                [&] { return ObjectRecord{.size = carrier_size(a) * carrier_size(b)}; });
}

std::vector<int> PointedSets::sum_table(const Mor& f, const Mor& g) const {
  const std::size_t a = f.map.size(), a2 = carrier_size(f.cod);
  std::vector<int>  out(a + g.map.size() - 1);
  for (std::size_t e = 0; e < out.size(); ++e) {
    auto [side, x] = wedge_split(static_cast<int>(e), a);
    out[e]         = side == Side::Left ? wedge_inject(Side::Left, f.map[x], a2)
                                        : wedge_inject(Side::Right, g.map[x], a2);
  }
  return out;
}

std::vector<int> PointedSets::prod_table(const Mor& f, const Mor& g) const {
  const std::size_t b = g.map.size(), b2 = carrier_size(g.cod);
  std::vector<int>  out(f.map.size() * b);
  for (std::size_t x = 0; x < f.map.size(); ++x)
    for (std::size_t y = 0; y < b; ++y)
      out[x * b + y] = static_cast<int>(f.map[x] * b2 + g.map[y]);
  return out;
}

bool PointedSets::preserves_structure(ObjId, ObjId, std::span<const int> map) const {
  return !map.empty() && map[0] == 0;
}

std::vector<Mor> PointedSets::enumerate_hom(ObjId dom, ObjId cod) const {
  const std::size_t n = carrier_size(dom), m = carrier_size(cod);
  double            count = 1;
  for (std::size_t k = 1; k < n; ++k) count *= static_cast<double>(m);
  if (count > kMaxHomCandidates)
    throw ModelError("hom(" + name(dom) + ", " + name(cod) + ") is too large to enumerate");
  std::vector<Mor> out;
  std::vector<int> map(n, 0);
  while (true) {
    out.push_back(Mor{dom, cod, map});
    std::size_t k = 1;
    while (k < n && map[k] == static_cast<int>(m) - 1) map[k++] = 0;
    if (k >= n) break;
    ++map[k];
  }
  return out;
}

Mor PointedSets::compute_structure(StructureMap map, std::span<const ObjId> args) const {
  switch (map) {
    case StructureMap::AssocSum: {
      const ObjId       a = args[0], b = args[1], c = args[2];
      const std::size_t na = carrier_size(a), nb = carrier_size(b);
      const ObjId       dom = sum(a, sum(b, c)), cod = sum(sum(a, b), c);
      const std::size_t nab = carrier_size(sum(a, b));
      Mor               f{dom, cod, std::vector<int>(carrier_size(dom))};
      for (std::size_t e = 0; e < f.map.size(); ++e) {
        auto [s1, x1] = wedge_split(static_cast<int>(e), na);
        if (s1 == Side::Left) {
          f.map[e] = wedge_inject(Side::Left, wedge_inject(Side::Left, x1, na), nab);
        } else {
          auto [s2, x2] = wedge_split(x1, nb);
          f.map[e]      = s2 == Side::Left
                              ? wedge_inject(Side::Left, wedge_inject(Side::Right, x2, na), nab)
                              : wedge_inject(Side::Right, x2, nab);
        }
      }
      return f;
    }
    case StructureMap::LunitSum: {
      const ObjId dom = sum(zero(), args[0]);
      Mor         f{dom, args[0], std::vector<int>(carrier_size(dom))};
      for (std::size_t e = 0; e < f.map.size(); ++e)
        f.map[e] = wedge_split(static_cast<int>(e), 1).second;
      return f;
    }
    case StructureMap::RunitSum: {
      const ObjId       dom = sum(args[0], zero());
      const std::size_t na  = carrier_size(args[0]);
      Mor               f{dom, args[0], std::vector<int>(carrier_size(dom))};
      for (std::size_t e = 0; e < f.map.size(); ++e)
        f.map[e] = wedge_split(static_cast<int>(e), na).second;
      return f;
    }
    case StructureMap::AssocProd: {
      const ObjId dom = prod(args[0], prod(args[1], args[2]));
      const ObjId cod = prod(prod(args[0], args[1]), args[2]);
      // Both sides number (x, y, z) as x*|B||C| + y*|C| + z.
      Mor f = identity(dom);
      f.cod = cod;
      return f;
    }
    case StructureMap::LunitProd: {
      Mor f = identity(prod(one(), args[0]));
      f.cod = args[0];
      return f;
    }
    case StructureMap::RunitProd: {
      Mor f = identity(prod(args[0], one()));
      f.cod = args[0];
      return f;
    }
    case StructureMap::I: {
      const ObjId       a = args[0], b = args[1];
      const std::size_t na = carrier_size(a), nb = carrier_size(b);
      const ObjId       dom = sum(a, b);
      Mor               f{dom, prod(a, b), std::vector<int>(carrier_size(dom))};
      for (std::size_t e = 0; e < f.map.size(); ++e) {
        auto [side, x] = wedge_split(static_cast<int>(e), na);
        f.map[e] = side == Side::Left ? x * static_cast<int>(nb) : x;
      }
      return f;
    }
  }
  throw ModelError("unknown structure map");
}

// ---------------------------------------------------------------------------
// Commutative monoids

void validate_monoid(const MonoidTable& m) {
  const std::size_t n = m.size;
  if (n == 0) throw ModelError("monoid '" + m.name + "' is empty");
  if (m.mul.size() != n * n)
    throw ModelError("monoid '" + m.name + "' table must have " +
                     std::to_string(n * n) + " entries");
  for (int v : m.mul)
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw ModelError("monoid '" + m.name + "' table entry out of range");
  for (std::size_t a = 0; a < n; ++a) {
    const int x = static_cast<int>(a);
    if (m(0, x) != x || m(x, 0) != x)
      throw ModelError("monoid '" + m.name + "': element 0 is not the identity");
    for (std::size_t b = 0; b < n; ++b) {
      const int y = static_cast<int>(b);
      if (m(x, y) != m(y, x))
        throw ModelError("monoid '" + m.name + "' is not commutative");
      for (std::size_t c = 0; c < n; ++c) {
        const int z = static_cast<int>(c);
        if (m(m(x, y), z) != m(x, m(y, z)))
          throw ModelError("monoid '" + m.name + "' is not associative");
      }
    }
  }
}

namespace {

// Relabels a table by a permutation fixing 0.
std::vector<int> relabel(const MonoidTable& m, const std::vector<int>& perm) {
  std::vector<int> out(m.mul.size());
  for (std::size_t a = 0; a < m.size; ++a)
    for (std::size_t b = 0; b < m.size; ++b)
      out[perm[a] * m.size + perm[b]] = perm[m(static_cast<int>(a), static_cast<int>(b))];
  return out;
}

std::vector<int> canonical_table(const MonoidTable& m) {
  std::vector<int> perm(m.size);
  for (std::size_t k = 0; k < m.size; ++k) perm[k] = static_cast<int>(k);
  std::vector<int> best = m.mul;
  while (std::next_permutation(perm.begin() + 1, perm.end()))
    best = std::min(best, relabel(m, perm));
  return best;
}

bool is_cyclic_group(const MonoidTable& m) {
  for (std::size_t g = 0; g < m.size; ++g) {
    std::vector<bool> seen(m.size, false);
    int               x = 0;
    for (std::size_t k = 0; k < m.size; ++k) {
      seen[x] = true;
      x       = m(x, static_cast<int>(g));
    }
    if (x == 0 && std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      return true;
  }
  return false;
}

}  // namespace

std::vector<MonoidTable> enumerate_commutative_monoids(std::size_t max_size) {
  std::vector<MonoidTable> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    // Free entries: products a*b with 1 <= a <= b < n.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) cells.emplace_back(a, b);
    std::vector<std::vector<int>> seen;
    std::vector<int>              choice(cells.size(), 0);
    char                          letter = 'a';
    while (true) {
      MonoidTable m{"", n, std::vector<int>(n * n)};
      for (std::size_t a = 0; a < n; ++a) {
        m.mul[a] = static_cast<int>(a);
        m.mul[a * n] = static_cast<int>(a);
      }
      for (std::size_t k = 0; k < cells.size(); ++k) {
        auto [a, b]      = cells[k];
        m.mul[a * n + b] = choice[k];
        m.mul[b * n + a] = choice[k];
      }
      bool ok = true;
      try {
        validate_monoid(m);
      } catch (const ModelError&) {
        ok = false;
      }
      if (ok) {
        auto canon = canonical_table(m);
        if (std::find(seen.begin(), seen.end(), canon) == seen.end()) {
          seen.push_back(canon);
          m.mul  = canon;
          m.name = is_cyclic_group(m) ? "C" + std::to_string(n)
                               : "M" + std::to_string(n) + std::string(1, letter++);
          out.push_back(std::move(m));
        }
      }
      std::size_t k = 0;
      while (k < choice.size() && choice[k] == static_cast<int>(n) - 1) choice[k++] = 0;
      if (k >= choice.size()) break;
      ++choice[k];
    }
  }
  return out;
}

CommutativeMonoids::CommutativeMonoids(std::vector<MonoidTable> tables) {
  add_base({.name = "C1", .size = 1, .table = {0}});
  bool unit_listed = false;
  for (auto& t : tables) {
    validate_monoid(t);
    if (t.size == 1) {
      unit_listed = true;
      continue;
    }
    for (ObjId x : objects())
      if (record(x).table == t.mul)
        throw ModelError("monoid '" + t.name + "' duplicates '" + record(x).name + "'");
    if (find(t.name))
      throw ModelError("duplicate object name '" + t.name + "'");
    add_base({.name = t.name, .size = t.size, .table = std::move(t.mul)});
  }
  if (!unit_listed) hide_unit();
}

std::unique_ptr<CommutativeMonoids> CommutativeMonoids::up_to(std::size_t max_size) {
  return std::make_unique<CommutativeMonoids>(enumerate_commutative_monoids(max_size));
}

int CommutativeMonoids::multiply(ObjId x, int a, int b) const {
  const auto& r = record(x);
  return r.table[static_cast<std::size_t>(a) * r.size + b];
}

ObjId CommutativeMonoids::make_sum(ObjId a, ObjId b) const { return make_prod(a, b); }

ObjId CommutativeMonoids::make_prod(ObjId a, ObjId b) const {
  return intern(Shape::Prod, a, b, [&] {
    const auto& ra = record(a);
    const auto& rb = record(b);
    const std::size_t n = ra.size * rb.size;
    ObjectRecord      rec{.size = n};
    rec.table.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const int left  = ra.table[(x / rb.size) * ra.size + y / rb.size];
        const int right = rb.table[(x % rb.size) * rb.size + y % rb.size];
        rec.table[x * n + y] = static_cast<int>(left * rb.size + right);
      }
    return rec;
  });
}

std::vector<int> CommutativeMonoids::sum_table(const Mor& f, const Mor& g) const {
  return prod_table(f, g);
}

std::vector<int> CommutativeMonoids::prod_table(const Mor& f, const Mor& g) const {
  const std::size_t b = g.map.size(), b2 = carrier_size(g.cod);
  std::vector<int>  out(f.map.size() * b);
  for (std::size_t x = 0; x < f.map.size(); ++x)
    for (std::size_t y = 0; y < b; ++y)
      out[x * b + y] = static_cast<int>(f.map[x] * b2 + g.map[y]);
  return out;
}

bool CommutativeMonoids::preserves_structure(ObjId dom, ObjId cod,
                                             std::span<const int> map) const {
  if (map.empty() || map[0] != 0) return false;
  const auto&       rd = record(dom);
  const auto&       rc = record(cod);
  const std::size_t n  = rd.size;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      if (map[rd.table[x * n + y]] != rc.table[map[x] * rc.size + map[y]]) return false;
  return true;
}

std::vector<Mor> CommutativeMonoids::enumerate_hom(ObjId dom, ObjId cod) const {
  const auto& rd = record(dom);
  const auto& rc = record(cod);
  const std::size_t n = rd.size, m = rc.size;

  // Greedy generating set: repeatedly add the least element not yet reached.
  std::vector<int>  gens;
  std::vector<bool> reached(n, false);
  reached[0] = true;
  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t x = 0; x < n; ++x) {
        if (!reached[x]) continue;
        for (int g : gens) {
          const auto y = static_cast<std::size_t>(rd.table[x * n + g]);
          if (!reached[y]) reached[y] = grew = true;
        }
      }
    }
  };
  for (std::size_t x = 1; x < n; ++x) {
    if (reached[x]) continue;
    gens.push_back(static_cast<int>(x));
    close();
  }

  double count = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) count *= static_cast<double>(m);
  if (count > kMaxHomCandidates)
    throw ModelError("hom(" + name(dom) + ", " + name(cod) + ") is too large to enumerate");

  std::vector<Mor> out;
  std::vector<int> images(gens.size(), 0);
  std::vector<int> map(n);
  std::vector<int> queue;
  while (true) {
    std::fill(map.begin(), map.end(), -1);
    map[0] = 0;
    queue.assign(1, 0);
    bool consistent = true;
    for (std::size_t q = 0; q < queue.size() && consistent; ++q) {
      const int x = queue[q];
      for (std::size_t k = 0; k < gens.size() && consistent; ++k) {
        const int y = rd.table[static_cast<std::size_t>(x) * n + gens[k]];
        const int v = rc.table[static_cast<std::size_t>(map[x]) * m + images[k]];
        if (map[y] == -1) {
          map[y] = v;
          queue.push_back(y);
        } else if (map[y] != v) {
          consistent = false;
        }
      }
    }
    if (consistent && preserves_structure(dom, cod, map))
      out.push_back(Mor{dom, cod, map});
    std::size_t k = 0;
    while (k < images.size() && images[k] == static_cast<int>(m) - 1) images[k++] = 0;
    if (k >= images.size()) break;
    ++images[k];
  }
  return out;
}

Mor CommutativeMonoids::compute_structure(StructureMap map,
                                          std::span<const ObjId> args) const {
  // Every component is the identity on carriers: the nested product numbering
  // (x, y, z) -> x*|B||C| + y*|C| + z does not depend on the bracketing.
  ObjId dom, cod;
  switch (map) {
    case StructureMap::AssocSum:
    case StructureMap::AssocProd:
      dom = prod(args[0], prod(args[1], args[2]));
      cod = prod(prod(args[0], args[1]), args[2]);
      break;
    case StructureMap::LunitSum:
    case StructureMap::LunitProd:
      dom = prod(one(), args[0]);
      cod = args[0];
      break;
    case StructureMap::RunitSum:
    case StructureMap::RunitProd:
      dom = prod(args[0], one());
      cod = args[0];
      break;
    case StructureMap::I:
      dom = cod = prod(args[0], args[1]);
      break;
    default: throw ModelError("unknown structure map");
  }
  Mor f = identity(dom);
  f.cod = cod;
  return f;
}

}  // namespace plcat
