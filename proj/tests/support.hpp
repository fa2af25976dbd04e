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

// Generators and brute-force oracles shared by the test programs.

#ifndef PLCAT_TESTS_SUPPORT_HPP_
#define PLCAT_TESTS_SUPPORT_HPP_

#include <random>
#include <vector>

#include "plcat/canon.hpp"
#include "plcat/model.hpp"

namespace plcat::testing {

// A random well-formed term with source `w` and at most `budget` nodes.
inline CanonTerm random_term(std::mt19937& rng, const Word& w, std::size_t budget,
                             Mode mode) {
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  const auto                  moves = elementary_moves_from(w, mode);
  std::vector<ElementaryTerm> root;
  for (const auto& e : moves)
    if (e.position == 0) root.push_back(e);
  if (budget <= 1 || moves.empty()) {
    if (root.empty() || pick(4) == 0) return CanonTerm::identity(w);
    return CanonTerm::gen(root[pick(root.size())].inner);
  }
  switch (pick(3)) {
    case 0:
      if (!root.empty()) return CanonTerm::gen(root[pick(root.size())].inner);
      return moves[pick(moves.size())].to_term();
    case 1:
      if (w.is_binary()) {
        const std::size_t left = 1 + pick(budget - 2 > 0 ? budget - 2 : 1);
        const auto        a    = random_term(rng, w.left(), left, mode);
        const auto        b = random_term(rng, w.right(), budget - 1 - a.size() + 1, mode);
        return par(w.op(), a, b);
      }
      [[fallthrough]];
    default: {
      const auto first = random_term(rng, w, budget / 2, mode);
      const auto rest  = budget > first.size() + 1 ? budget - first.size() - 1 : 1;
      return vcompose(random_term(rng, first.target(), rest, mode), first);
    }
  }
}

// All functions {0..n-1} -> {0..m-1} sending 0 to 0.
inline std::vector<std::vector<int>> pointed_functions(std::size_t n, std::size_t m) {
  std::vector<std::vector<int>> out;
  std::vector<int>              f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t k = n;
    while (k > 1 && f[k - 1] == static_cast<int>(m) - 1) f[--k] = 0;
    if (k <= 1) break;
    ++f[k - 1];
  }
  return out;
}

}  // namespace plcat::testing

#endif  // PLCAT_TESTS_SUPPORT_HPP_
