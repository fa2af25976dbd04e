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

// Sweeps over canonical paths between words of length <= 2.
//
// For a word u write N(u) for normalized_cancel(u): unit cancellation
// followed by i when the unit-free core is a sum, so N(u) lands in "_",
// "(_*_)" or "0".  The unit-cancellation square for a path c : u -> u' reads
// N(u') o c = N(u).
//
// If every single step e : u -> u' satisfies the square (the step is "good"),
// then by induction so does every path made of such steps.  The sweeps use
// this: they check steps over a region, and only when some step is bad do
// they enumerate path values to look for a failing path.

#ifndef PLCAT_COHERENCE_HPP_
#define PLCAT_COHERENCE_HPP_

#include <cstddef>
#include <vector>

#include "plcat/canon.hpp"
#include "plcat/model.hpp"
#include "plcat/report.hpp"

namespace plcat {

struct SweepOptions {
  std::size_t depth          = 4;
  std::size_t max_tuple_size = 2;
  Mode        mode           = Mode::Prelinear;
};

// N(u') o c = N(u) for every path c of at most options.depth steps leaving
// one of the sources.
CheckReport unit_cancellation_square_check(const Model& m, const std::vector<Word>& sources,
                                           const SweepOptions& options = {});

// The square for every single step between two words of `words`.  With
// `require_invertible`, N(u) must also be invertible at every tuple.
CheckReport local_square_check(const Model& m, const std::vector<Word>& words,
                               bool require_invertible, const SweepOptions& options = {});

// For all pairs (v, w) of equal length drawn from `words`: every path v -> w
// of at most options.depth steps has the same value at each tuple, and that
// value is invertible.
CheckReport path_uniqueness_check(const Model& m, const std::vector<Word>& words,
                                  const SweepOptions& options = {});

// Words of length 0, 1 and 2 with at most `max_units` unit leaves.
std::vector<Word> words_up_to_length_two(std::size_t max_units);

}  // namespace plcat

#endif  // PLCAT_COHERENCE_HPP_
