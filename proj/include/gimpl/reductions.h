// Copyright 2026 The gimpl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GIMPL_REDUCTIONS_H_
#define GIMPL_REDUCTIONS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gimpl/ext_value.h"
#include "gimpl/game.h"
#include "gimpl/promise.h"

namespace gimpl {

// Exact Cover by 3-Sets, in the variant where every element occurs in
// exactly three sets. Elements are 0..3n-1; there are 3n sets, each a
// sorted triple of distinct elements. Equal triples are allowed and are
// told apart by their index.
struct X3CInstance {
  int n = 0;
  std::vector<std::array<int, 3>> sets;

  int num_elements() const { return 3 * n; }
  // Throws unless sizes and occurrence counts are as described above.
  void validate() const;
  // Indices of the sets containing `element`, ascending.
  std::vector<int> sets_containing(int element) const;

  friend bool operator==(const X3CInstance&, const X3CInstance&) = default;
};

// Sorted set indices.
using ExactCover = std::vector<int>;

bool is_exact_cover(const X3CInstance& instance, const ExactCover& cover);

enum class Force { kYes, kNo, kAny };

// Seeded sampler. kYes plants a disjoint cover, kNo rejection-samples until
// brute_x3c finds no cover (at most kMaxNoAttempts draws).
inline constexpr int kMaxNoAttempts = 10'000;
X3CInstance gen_x3c(int n, std::uint64_t seed, Force force);

// Lexicographically first exact cover, if any.
std::optional<ExactCover> brute_x3c(const X3CInstance& instance);

struct TwoPlayerReduction {
  Game game;
  RectRegion region;
  ExtValue budget;
};

// Two players with strategies a<i> (elements) followed by c<i>_<j> (element
// i inside set j, ordered by (i, j)); the c-strategies are desired and the
// budget is 0.
TwoPlayerReduction x3c_to_two_player(const X3CInstance& instance);
PaymentPromise x3c_forward_promise_2p(const X3CInstance& instance,
                                      const ExactCover& cover);
// Reads the structure back from the strategy names.
ExactCover decode_cover_2p(const Game& game, const PaymentPromise& promise);

struct GraphicalReduction {
  GraphicalGame game;
  RectRegion region;
  ExtValue budget;
};

// Players a<i> then C<j>, strategies {T, F}, an edge per membership. Element
// players must play T; the budget is 1/2.
GraphicalReduction x3c_to_graphical(const X3CInstance& instance);
PaymentPromise x3c_forward_promise_graphical(const X3CInstance& instance,
                                             const ExactCover& cover,
                                             const ExtValue& budget);
ExactCover decode_cover_graphical(const GraphicalGame& game,
                                  const PaymentPromise& promise);

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const;
  std::vector<std::vector<int>> adjacency() const;
};

// Colors are 1..3, one per vertex.
using Coloring = std::vector<int>;

struct ColoringInstance {
  Graph graph;
  std::optional<Coloring> coloring;
};

bool is_proper_coloring(const Graph& graph, const Coloring& coloring);

// Symmetric two-player game with strategies v<k> (vertices), v<k>c<c>
// (color choices, desired) and d<m> (dummies); budget 1.
TwoPlayerReduction coloring_to_exact(const Graph& graph);
PaymentPromise coloring_forward_promise(const Graph& graph,
                                        const Coloring& coloring);
ColoringInstance decode_coloring(const Game& game,
                                 const PaymentPromise& promise);

// Lexicographically first proper 3-coloring, if any.
std::optional<Coloring> brute_coloring(const Graph& graph);

}  // namespace gimpl

#endif  // GIMPL_REDUCTIONS_H_
