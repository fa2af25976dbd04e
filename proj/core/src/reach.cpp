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

#include "plcat/reach.hpp"

#include <algorithm>

#include "plcat/eval.hpp"

namespace plcat {

std::size_t PathAlgebra::VecHash::operator()(const std::vector<Mor>& v) const noexcept {
  std::size_t h = v.size();
  MorHash     mh;
  for (const auto& f : v) h = h * 0x100000001b3ULL ^ mh(f);
  return h;
}

std::size_t PathAlgebra::EdgeHash::operator()(const ElementaryTerm& e) const noexcept {
  std::size_t h = e.context.hash() * 31 + e.position;
  h             = h * 31 + static_cast<std::size_t>(e.inner.kind) * 2 + e.inner.inverse;
  for (const auto& a : e.inner.args) h = h * 1000003u ^ a.hash();
  return h;
}

PathAlgebra::PathAlgebra(const Model& model, std::vector<std::vector<ObjId>> tuples,
                         Mode mode)
    : model_(model), tuples_(std::move(tuples)), mode_(mode) {
  const std::size_t arity = tuples_.empty() ? 0 : tuples_.front().size();
  for (const auto& t : tuples_)
    if (t.size() != arity) throw PreconditionError("object tuples must share one arity");
}

ValueId PathAlgebra::intern(std::vector<Mor> values) {
  if (auto it = ids_.find(values); it != ids_.end()) return it->second;
  const auto id = static_cast<ValueId>(table_.size());
  table_.push_back(values);
  ids_.emplace(std::move(values), id);
  return id;
}

ValueId PathAlgebra::identity(const Word& w) {
  if (auto it = identities_.find(w); it != identities_.end()) return it->second;
  std::vector<Mor> v;
  for (std::size_t k = 0; k < tuples_.size(); ++k)
    v.push_back(model_.identity(eval_object(model_, w, tuples_[k])));
  const ValueId id = intern(std::move(v));
  identities_.emplace(w, id);
  return id;
}

ValueId PathAlgebra::edge(const ElementaryTerm& e) {
  if (auto it = edges_.find(e); it != edges_.end()) return it->second;
  std::vector<Mor> v;
  for (const auto& t : tuples_) v.push_back(eval_elementary(model_, e, t));
  const ValueId id = intern(std::move(v));
  edges_.emplace(e, id);
  return id;
}

ValueId PathAlgebra::term(const CanonTerm& t) {
  std::vector<Mor> v;
  for (const auto& tuple : tuples_) v.push_back(eval_canon(model_, t, tuple));
  return intern(std::move(v));
}

ValueId PathAlgebra::compose(ValueId later, ValueId earlier) {
  const std::uint64_t key = (static_cast<std::uint64_t>(later) << 32) | earlier;
  if (auto it = composed_.find(key); it != composed_.end()) return it->second;
  std::vector<Mor> v;
  const auto&      a = table_[later];
  const auto&      b = table_[earlier];
  v.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) v.push_back(model_.compose(a[k], b[k]));
  const ValueId id = intern(std::move(v));
  composed_.emplace(key, id);
  return id;
}

namespace {

bool insert_sorted(ValueSet& set, ValueId id) {
  auto it = std::lower_bound(set.begin(), set.end(), id);
  if (it != set.end() && *it == id) return false;
  set.insert(it, id);
  return true;
}

Reach grow(PathAlgebra& alg, const Word& anchor, std::size_t radius, bool forward) {
  Reach r;
  r.anchor  = anchor;
  r.radius  = radius;
  r.forward = forward;
  const ValueId start = alg.identity(anchor);
  r.values[anchor]    = {start};

  std::unordered_map<Word, ValueSet, WordHash> delta{{anchor, {start}}};
  for (std::size_t step = 0; step < radius && !delta.empty(); ++step) {
    std::unordered_map<Word, ValueSet, WordHash> next;
    for (const auto& [u, fresh] : delta) {
      const auto moves = forward ? elementary_moves_from(u, alg.mode())
                                 : elementary_moves_into(u, alg.mode());
      for (const auto& e : moves) {
        ++r.steps_expanded;
        const ValueId ev    = alg.edge(e);
        const Word    other = forward ? e.target() : e.context;
        auto&         known = r.values[other];
        for (ValueId x : fresh) {
          const ValueId y = forward ? alg.compose(ev, x) : alg.compose(x, ev);
          if (insert_sorted(known, y)) insert_sorted(next[other], y);
        }
      }
    }
    delta = std::move(next);
  }
  return r;
}

}  // namespace

Reach reach_forward(PathAlgebra& alg, const Word& source, std::size_t radius) {
  return grow(alg, source, radius, true);
}

Reach reach_backward(PathAlgebra& alg, const Word& target, std::size_t radius) {
  return grow(alg, target, radius, false);
}

ValueSet meet(PathAlgebra& alg, const Reach& forward, const Reach& backward) {
  if (!forward.forward || backward.forward)
    throw PreconditionError("meet expects a forward and a backward reach");
  ValueSet out;
  const bool small_forward = forward.values.size() <= backward.values.size();
  const auto& scan  = small_forward ? forward.values : backward.values;
  const auto& probe = small_forward ? backward.values : forward.values;
  for (const auto& [u, xs] : scan) {
    auto it = probe.find(u);
    if (it == probe.end()) continue;
    const ValueSet& firsts = small_forward ? xs : it->second;
    const ValueSet& lasts  = small_forward ? it->second : xs;
    for (ValueId a : firsts)
      for (ValueId b : lasts) insert_sorted(out, alg.compose(b, a));
  }
  return out;
}

ValueSet path_values(PathAlgebra& alg, const Word& v, const Word& w, std::size_t depth) {
  if (v.length() != w.length())
    throw PreconditionError("path_values requires words of equal length");
  const std::size_t a = (depth + 1) / 2;
  return meet(alg, reach_forward(alg, v, a), reach_backward(alg, w, depth - a));
}

}  // namespace plcat
