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

#include "plcat/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "laws.hpp"
#include "plcat/eval.hpp"
#include "plcat/reach.hpp"

namespace plcat {
namespace {

void check_words(const Word& source_word, std::size_t cols, const Word& target_word,
                 std::size_t rows) {
  if (!is_pure(source_word, Op::Sum))
    throw PreconditionError("matrix source must be a pure sum word: " +
                            render_word(source_word));
  if (!is_pure(target_word, Op::Prod))
    throw PreconditionError("matrix target must be a pure product word: " +
                            render_word(target_word));
  if (source_word.length() != cols || target_word.length() != rows)
    throw PreconditionError("matrix shape does not match word lengths");
}

struct Frame {
  std::vector<Mor> inclusions;
  std::vector<Mor> projections;
  ObjId            source = 0;
  ObjId            target = 0;
};

Frame frame_of(const Model& m, const MatrixPresentation& p) {
  Frame fr;
  fr.source = eval_object(m, p.source_word, p.source_objects);
  fr.target = eval_object(m, p.target_word, p.target_objects);
  for (std::size_t l = 0; l < p.cols(); ++l)
    fr.inclusions.push_back(inclusion(m, p.source_word, p.source_objects, l));
  for (std::size_t k = 0; k < p.rows(); ++k)
    fr.projections.push_back(projection(m, p.target_word, p.target_objects, k));
  return fr;
}

// pi o h o iota == e, without building the composite.
bool entry_matches(const Mor& pi, const Mor& h, const Mor& iota, const Mor& e) {
  for (std::size_t x = 0; x < iota.map.size(); ++x)
    if (pi.map[h.map[iota.map[x]]] != e.map[x]) return false;
  return true;
}

}  // namespace

MatrixPresentation make_matrix(const Model& m, Word source_word,
                               std::vector<ObjId> source_objects, Word target_word,
                               std::vector<ObjId> target_objects,
                               std::vector<std::vector<Mor>> entries) {
  check_words(source_word, source_objects.size(), target_word, target_objects.size());
  if (entries.size() != target_objects.size())
    throw PreconditionError("matrix has the wrong number of rows");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].size() != source_objects.size())
      throw PreconditionError("matrix has the wrong number of columns");
    for (std::size_t l = 0; l < entries[k].size(); ++l) {
      const Mor& e = entries[k][l];
      if (e.dom != source_objects[l] || e.cod != target_objects[k])
        throw PreconditionError("matrix entry (" + std::to_string(k) + ", " +
                                std::to_string(l) + ") has type " + m.name(e.dom) +
                                " -> " + m.name(e.cod) + ", expected " +
                                m.name(source_objects[l]) + " -> " +
                                m.name(target_objects[k]));
    }
  }
  return {std::move(source_word), std::move(source_objects), std::move(target_word),
          std::move(target_objects), std::move(entries)};
}

MatrixPresentation matrix_of(const Model& m, const Mor& f, const Word& source_word,
                             const std::vector<ObjId>& source_objects,
                             const Word& target_word,
                             const std::vector<ObjId>& target_objects) {
  check_words(source_word, source_objects.size(), target_word, target_objects.size());
  const ObjId s = eval_object(m, source_word, source_objects);
  const ObjId t = eval_object(m, target_word, target_objects);
  if (f.dom != s || f.cod != t)
    throw PreconditionError("morphism " + m.describe(f) + " is not of type " + m.name(s) +
                            " -> " + m.name(t));
  MatrixPresentation p{source_word, source_objects, target_word, target_objects, {}};
  p.entries.resize(target_objects.size());
  for (std::size_t k = 0; k < target_objects.size(); ++k) {
    const Mor pi = projection(m, target_word, target_objects, k);
    for (std::size_t l = 0; l < source_objects.size(); ++l)
      p.entries[k].push_back(
          m.compose(pi, m.compose(f, inclusion(m, source_word, source_objects, l))));
  }
  return p;
}

std::optional<Mor> realize(const Model& m, const MatrixPresentation& p) {
  const Frame        fr = frame_of(m, p);
  std::optional<Mor> found;
  for (const Mor& h : m.hom(fr.source, fr.target)) {
    bool ok = true;
    for (std::size_t k = 0; ok && k < p.rows(); ++k)
      for (std::size_t l = 0; ok && l < p.cols(); ++l)
        ok = entry_matches(fr.projections[k], h, fr.inclusions[l], p.entries[k][l]);
    if (!ok) continue;
    if (found)
      throw IntegrityError("two morphisms present the same matrix: " + m.describe(*found) +
                           " and " + m.describe(h));
    found = h;
  }
  return found;
}

MatrixPresentation identity_matrix(const Model& m, const std::vector<ObjId>& objects,
                                   std::optional<Word> source_word,
                                   std::optional<Word> target_word) {
  const std::size_t n = objects.size();
  Word              s = source_word ? *source_word : right_nested(Op::Sum, n);
  Word              t = target_word ? *target_word : right_nested(Op::Prod, n);
  std::vector<std::vector<Mor>> entries(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      entries[k].push_back(k == l ? m.identity(objects[k])
                                  : zero_morphism(m, objects[l], objects[k]));
  return make_matrix(m, std::move(s), objects, std::move(t), objects, std::move(entries));
}

std::string render_matrix(const Model& m, const MatrixPresentation& p) {
  std::vector<std::vector<std::string>> cells(p.rows());
  std::vector<std::size_t>              width(p.cols(), 0);
  for (std::size_t k = 0; k < p.rows(); ++k)
    for (std::size_t l = 0; l < p.cols(); ++l) {
      std::ostringstream os;
      os << '[';
      for (std::size_t x = 0; x < p.entries[k][l].map.size(); ++x)
        os << (x ? " " : "") << p.entries[k][l].map[x];
      os << ']';
      cells[k].push_back(os.str());
      width[l] = std::max(width[l], cells[k].back().size());
    }
  std::ostringstream os;
  for (std::size_t k = 0; k < p.rows(); ++k) {
    os << m.name(p.target_objects[k]) << " |";
    for (std::size_t l = 0; l < p.cols(); ++l)
      os << ' ' << cells[k][l] << std::string(width[l] - cells[k][l].size(), ' ');
    os << '\n';
  }
  return os.str();
}

namespace {

// Distinct values at one tuple, or the reason the tuple fails.
std::string coherence_problem(const Model& m, const std::vector<Mor>& seen, const Word& v,
                              const Word& w, const std::vector<ObjId>& tuple) {
  if (seen.empty()) return "no canonical path within the depth bound";
  if (seen.size() > 1) return std::to_string(seen.size()) + " distinct values";
  const auto mat = matrix_of(m, seen.front(), v, tuple, w, tuple);
  if (mat.entries != identity_matrix(m, tuple, v, w).entries) return "matrix is not the identity";
  return {};
}

std::vector<Mor> distinct_at(const PathAlgebra& alg, const ValueSet& values, std::size_t t) {
  std::vector<Mor> seen;
  for (ValueId id : values) {
    const Mor& f = alg.values(id)[t];
    if (std::find(seen.begin(), seen.end(), f) == seen.end()) seen.push_back(f);
  }
  return seen;
}

}  // namespace

CheckReport coherence_identity_check(const Model& m, std::size_t n,
                                     const CoherenceOptions& options) {
  CheckReport report;
  report.law        = "coherence.identity_matrix";
  const auto tuples = object_tuples(m, n, options.max_tuple_size);
  PathAlgebra alg(m, tuples, options.mode);
  for (const Word& v : bracketings(Op::Sum, n)) {
    for (const Word& w : bracketings(Op::Prod, n)) {
      const ValueSet values = path_values(alg, v, w, options.depth);
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        ++report.instances;
        auto              seen    = distinct_at(alg, values, t);
        const std::string problem = coherence_problem(m, seen, v, w, tuples[t]);
        if (problem.empty()) continue;
        ++report.failures;
        report.passed = false;
        if (!report.counterexample)
          report.counterexample = Counterexample{
              report.law,
              Instance{tuples[t], std::move(seen),
                       {render_word(v), render_word(w), std::to_string(options.depth),
                        mode_name(options.mode)}},
              problem};
      }
    }
  }
  report.note = "n = " + std::to_string(n) + ", " + std::to_string(alg.size()) +
                " distinct path values, " + std::to_string(alg.edges_evaluated()) +
                " elementary steps evaluated";
  return report;
}

namespace detail {

const std::vector<Law>& coherence_laws() {
  static const std::vector<Law> laws{
      {"coherence.identity_matrix",
       [](const LawContext& c, const Visit& visit) {
         for (std::size_t n = 1; n <= 3; ++n)
           for (const Word& v : bracketings(Op::Sum, n))
             for (const Word& w : bracketings(Op::Prod, n))
               for (const auto& t : object_tuples(c.m, n, c.options.triple_max_size))
                 if (!visit(Instance{t, {}, {render_word(v), render_word(w), "6",
                                             mode_name(Mode::Prelinear)}}))
                   return;
       },
       [](const LawContext& c, const Instance& i) -> Verdict {
         const Word  v     = parse_word(i.labels.at(0));
         const Word  w     = parse_word(i.labels.at(1));
         const auto  depth = std::stoul(i.labels.at(2));
         PathAlgebra alg(c.m, {i.objects}, parse_mode(i.labels.at(3)));
         const auto  seen = distinct_at(alg, path_values(alg, v, w, depth), 0);
         std::string problem = coherence_problem(c.m, seen, v, w, i.objects);
         if (problem.empty()) return std::nullopt;
         return problem;
       }},
  };
  return laws;
}

}  // namespace detail

}  // namespace plcat
