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

#include "plcat/coherence.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "laws.hpp"
#include "plcat/eval.hpp"
#include "plcat/reach.hpp"

namespace plcat {
namespace {

using Values = std::vector<Mor>;  // one per tuple

constexpr const char* kSquareLaw     = "coherence.unit_cancellation_square";
constexpr const char* kUniquenessLaw = "coherence.path_uniqueness";

Values evaluate(const Model& m, const CanonTerm& t,
                const std::vector<std::vector<ObjId>>& tuples) {
  Values out;
  out.reserve(tuples.size());
  for (const auto& tuple : tuples) out.push_back(eval_canon(m, t, tuple));
  return out;
}

std::map<std::size_t, std::vector<Word>> by_length(const std::vector<Word>& words) {
  std::map<std::size_t, std::vector<Word>> out;
  for (const Word& w : words) out[w.length()].push_back(w);
  return out;
}

// Memoized N(u) values.
class Normalizer {
 public:
  Normalizer(const Model& m, const std::vector<std::vector<ObjId>>& tuples)
      : m_(m), tuples_(tuples) {}

  const Values& operator()(const Word& u) {
    auto it = cache_.find(u);
    if (it == cache_.end()) it = cache_.emplace(u, evaluate(m_, normalized_cancel(u), tuples_)).first;
    return it->second;
  }

 private:
  const Model&                                    m_;
  const std::vector<std::vector<ObjId>>&          tuples_;
  std::unordered_map<Word, Values, WordHash>      cache_;
};

// First tuple index at which the step is bad, if any.
std::optional<std::size_t> bad_step(const Model& m, const ElementaryTerm& e, const Values& before,
                                    const Values& after,
                                    const std::vector<std::vector<ObjId>>& tuples) {
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const Mor step = eval_elementary(m, e, tuples[t]);
    if (m.compose(after[t], step) != before[t]) return t;
  }
  return std::nullopt;
}

Counterexample square_counterexample(const Model& m, const CanonTerm& c,
                                     const std::vector<ObjId>& tuple, std::string detail) {
  const Mor lhs = m.compose(eval_canon(m, normalized_cancel(c.target()), tuple),
                            eval_canon(m, c, tuple));
  const Mor rhs = eval_canon(m, normalized_cancel(c.source()), tuple);
  return Counterexample{kSquareLaw, Instance{tuple, {lhs, rhs}, {render_term(c)}},
                        std::move(detail)};
}

// Words reachable from `sources` in fewer than `depth` steps.
std::vector<Word> inner_region(const std::vector<Word>& sources, std::size_t depth, Mode mode) {
  std::unordered_set<Word, WordHash> seen(sources.begin(), sources.end());
  std::vector<Word>                  order(sources.begin(), sources.end());
  std::vector<Word>                  frontier = order;
  for (std::size_t r = 1; r < depth && !frontier.empty(); ++r) {
    std::vector<Word> next;
    for (const Word& u : frontier)
      for (const auto& e : elementary_moves_from(u, mode)) {
        Word v = e.target();
        if (seen.insert(v).second) next.push_back(v);
      }
    order.insert(order.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return order;
}

// Exhaustive path search from one source for a failing path.
std::optional<Counterexample> failing_path(const Model& m, const Word& source,
                                           const std::vector<std::vector<ObjId>>& tuples,
                                           const SweepOptions& options) {
  PathAlgebra alg(m, tuples, options.mode);
  const Reach reach = reach_forward(alg, source, options.depth);
  const ValueId expected = alg.term(normalized_cancel(source));
  std::vector<Word> targets;
  for (const auto& [u, values] : reach.values) targets.push_back(u);
  std::sort(targets.begin(), targets.end());
  for (const Word& u : targets) {
    const ValueId nu = alg.term(normalized_cancel(u));
    for (ValueId v : reach.values.at(u)) {
      if (alg.compose(nu, v) == expected) continue;
      // Recover a concrete term with this value.
      for (const CanonTerm& c : canonical_between(source, u, options.depth, options.mode)) {
        if (alg.term(c) != v) continue;
        for (std::size_t t = 0; t < tuples.size(); ++t)
          if (alg.values(alg.compose(nu, v))[t] != alg.values(expected)[t])
            return square_counterexample(m, c, tuples[t], "square fails along this path");
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Word> words_up_to_length_two(std::size_t max_units) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= 2; ++n) {
    auto ws = enumerate_words(n, max_units);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

CheckReport unit_cancellation_square_check(const Model& m, const std::vector<Word>& sources,
                                           const SweepOptions& options) {
  CheckReport report;
  report.law               = kSquareLaw;
  std::size_t region_words = 0, bad_steps = 0;
  for (const auto& [length, group] : by_length(sources)) {
    const auto tuples = object_tuples(m, length, options.max_tuple_size);
    Normalizer norm(m, tuples);
    const auto region = inner_region(group, options.depth, options.mode);
    region_words += region.size();
    std::size_t group_bad = 0;
    for (const Word& u : region) {
      const Values before = norm(u);
      for (const auto& e : elementary_moves_from(u, options.mode)) {
        ++report.instances;
        if (bad_step(m, e, before, norm(e.target()), tuples)) ++group_bad;
      }
    }
    bad_steps += group_bad;
    if (group_bad == 0) continue;
    for (const Word& s : group) {
      if (auto c = failing_path(m, s, tuples, options)) {
        ++report.failures;
        report.passed = false;
        if (!report.counterexample) report.counterexample = std::move(c);
      }
    }
  }
  report.note = std::to_string(sources.size()) + " sources, " + std::to_string(region_words) +
                " words within " + std::to_string(options.depth ? options.depth - 1 : 0) +
                " steps, " + std::to_string(report.instances) + " steps checked, " +
                std::to_string(bad_steps) + " bad steps";
  return report;
}

CheckReport local_square_check(const Model& m, const std::vector<Word>& words,
                               bool require_invertible, const SweepOptions& options) {
  CheckReport report;
  report.law = kSquareLaw;
  auto fail  = [&](Counterexample c) {
    ++report.failures;
    report.passed = false;
    if (!report.counterexample) report.counterexample = std::move(c);
  };
  for (const auto& [length, group] : by_length(words)) {
    const auto tuples = object_tuples(m, length, options.max_tuple_size);
    Normalizer norm(m, tuples);
    std::unordered_set<Word, WordHash> members(group.begin(), group.end());
    for (const Word& u : group) {
      const Values before = norm(u);
      if (require_invertible)
        for (std::size_t t = 0; t < tuples.size(); ++t)
          if (!m.inverse(before[t]))
            fail(Counterexample{kSquareLaw,
                                Instance{tuples[t], {before[t]},
                                         {render_term(normalized_cancel(u)), "invertible"}},
                                "unit cancellation is not invertible"});
      for (const auto& e : elementary_moves_from(u, options.mode)) {
        const Word v = e.target();
        if (!members.count(v)) continue;
        ++report.instances;
        if (auto t = bad_step(m, e, before, norm(v), tuples))
          fail(square_counterexample(m, e.to_term(), tuples[*t], "square fails at one step"));
      }
    }
  }
  report.note = std::to_string(words.size()) + " words, " + std::to_string(report.instances) +
                " steps checked";
  return report;
}

CheckReport path_uniqueness_check(const Model& m, const std::vector<Word>& words,
                                  const SweepOptions& options) {
  CheckReport report;
  report.law              = kUniquenessLaw;
  std::size_t unconnected = 0;
  const std::size_t fwd = (options.depth + 1) / 2, bwd = options.depth / 2;
  for (const auto& [length, group] : by_length(words)) {
    const auto  tuples = object_tuples(m, length, options.max_tuple_size);
    PathAlgebra alg(m, tuples, options.mode);
    std::vector<Reach> forward, backward;
    for (const Word& w : group) forward.push_back(reach_forward(alg, w, fwd));
    for (const Word& w : group) backward.push_back(reach_backward(alg, w, bwd));
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = 0; b < group.size(); ++b) {
        const ValueSet values = meet(alg, forward[a], backward[b]);
        if (values.empty()) ++unconnected;
        for (std::size_t t = 0; t < tuples.size(); ++t) {
          ++report.instances;
          std::vector<Mor> seen;
          for (ValueId id : values) {
            const Mor& f = alg.values(id)[t];
            if (std::find(seen.begin(), seen.end(), f) == seen.end()) seen.push_back(f);
          }
          std::string problem;
          if (seen.size() > 1)
            problem = std::to_string(seen.size()) + " distinct values";
          else if (seen.size() == 1 && !m.inverse(seen.front()))
            problem = "value is not invertible";
          if (problem.empty()) continue;
          ++report.failures;
          report.passed = false;
          if (!report.counterexample)
            report.counterexample = Counterexample{
                kUniquenessLaw,
                Instance{tuples[t], seen,
                         {render_word(group[a]), render_word(group[b]),
                          std::to_string(options.depth), mode_name(options.mode)}},
                problem};
        }
      }
    }
  }
  report.note = std::to_string(words.size()) + " words, depth " +
                std::to_string(options.depth) + ", " + std::to_string(unconnected) +
                " ordered pairs without a path";
  return report;
}

namespace detail {

const std::vector<Law>& coherence_sweep_laws() {
  static const std::vector<Law> laws{
      {kSquareLaw, [](const LawContext&, const Visit&) {},
       [](const LawContext& c, const Instance& i) -> Verdict {
         const Model& m = c.m;
         if (i.labels.size() > 1 && i.labels[1] == "invertible") {
           const CanonTerm n = parse_term(i.labels.at(0));
           const Mor       f = eval_canon(m, n, i.objects);
           if (m.inverse(f)) return std::nullopt;
           return "unit cancellation " + m.describe(f) + " is not invertible";
         }
         const CanonTerm t   = parse_term(i.labels.at(0));
         const Mor       lhs = m.compose(eval_canon(m, normalized_cancel(t.target()), i.objects),
                                         eval_canon(m, t, i.objects));
         const Mor       rhs = eval_canon(m, normalized_cancel(t.source()), i.objects);
         return expect_equal(m, lhs, rhs, "N(target) c = N(source)");
       }},
      {kUniquenessLaw, [](const LawContext&, const Visit&) {},
       [](const LawContext& c, const Instance& i) -> Verdict {
         const Word  v = parse_word(i.labels.at(0));
         const Word  w = parse_word(i.labels.at(1));
         PathAlgebra alg(c.m, {i.objects}, parse_mode(i.labels.at(3)));
         std::vector<Mor> seen;
         for (ValueId id : path_values(alg, v, w, std::stoul(i.labels.at(2)))) {
           const Mor& f = alg.values(id)[0];
           if (std::find(seen.begin(), seen.end(), f) == seen.end()) seen.push_back(f);
         }
         if (seen.size() > 1) return std::to_string(seen.size()) + " distinct values";
         if (seen.size() == 1 && !c.m.inverse(seen.front())) return "value is not invertible";
         return std::nullopt;
       }},
  };
  return laws;
}

}  // namespace detail
}  // namespace plcat
