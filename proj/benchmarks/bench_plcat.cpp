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

#include <benchmark/benchmark.h>

#include "plcat/centrality.hpp"
#include "plcat/checks.hpp"
#include "plcat/coherence.hpp"
#include "plcat/eval.hpp"
#include "plcat/matrix.hpp"

using namespace plcat;

static void BM_UnitCancel(benchmark::State& state) {
  const auto words = enumerate_words(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& w : words) benchmark::DoNotOptimize(normalized_cancel(w));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * words.size()));
}
BENCHMARK(BM_UnitCancel)->Arg(1)->Arg(2);

static void BM_CanonicalBetween(benchmark::State& state) {
  const Word v = parse_word("(((_+_)+_)+0)"), w = parse_word("(_+(_+_))");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        canonical_between(v, w, static_cast<std::size_t>(state.range(0)), Mode::Prelinear));
}
BENCHMARK(BM_CanonicalBetween)->DenseRange(2, 4);

static void BM_CoherenceIdentity(benchmark::State& state) {
  auto ps = PointedSets::up_to(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(coherence_identity_check(
        *ps, static_cast<std::size_t>(state.range(0)), {4, 2, Mode::Prelinear}));
}
BENCHMARK(BM_CoherenceIdentity)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_StructureSuitePointedSets(benchmark::State& state) {
  for (auto _ : state) {
    auto ps = PointedSets::up_to(static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(check_structure(*ps));
  }
}
BENCHMARK(BM_StructureSuitePointedSets)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_Realize(benchmark::State& state) {
  auto        ps = PointedSets::up_to(3);
  const ObjId p3 = *ps->find("P3");
  const auto  p  = identity_matrix(*ps, {p3, p3});
  for (auto _ : state) benchmark::DoNotOptimize(realize(*ps, p));
}
BENCHMARK(BM_Realize);

static void BM_AddCentral(benchmark::State& state) {
  auto        cm = CommutativeMonoids::up_to(3);
  const ObjId c3 = *cm->find("C3");
  const auto  z  = central_hom(*cm, c3, c3);
  for (auto _ : state)
    for (const Mor& f : z)
      for (const Mor& g : z) benchmark::DoNotOptimize(add_central(*cm, f, g));
}
BENCHMARK(BM_AddCentral);

static void BM_PathUniqueness(benchmark::State& state) {
  auto       cm    = CommutativeMonoids::up_to(2);
  const auto words = words_up_to_length_two(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(path_uniqueness_check(
        *cm, words, {static_cast<std::size_t>(state.range(0)), 2, Mode::PartiallyLinear}));
}
BENCHMARK(BM_PathUniqueness)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
