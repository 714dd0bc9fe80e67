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

#ifndef GIMPL_DOMINATION_H_
#define GIMPL_DOMINATION_H_

#include <optional>
#include <vector>

#include "gimpl/game.h"
#include "gimpl/view.h"

namespace gimpl {

// Evidence that `dominating` weakly dominates `dominated` for `player`.
// `strict_at` lists the strategies of the players in `scope` (all other
// players, or the neighbors in a graphical view) where the inequality is
// strict.
struct DominanceWitness {
  int player = 0;
  int dominating = 0;
  int dominated = 0;
  std::vector<int> scope;
  Profile strict_at;
};

// Weak domination of y by x for player i in the modified game. Throws if
// x == y or either index is out of range.
std::optional<DominanceWitness> dominates(const ModifiedGameView& view,
                                          int player, int x, int y);

// X_i^*: strategies of player i that no other strategy dominates.
std::vector<int> undominated(const ModifiedGameView& view, int player);

// X_1^* x ... x X_n^*.
RectRegion undominated_region(const ModifiedGameView& view);

// Smallest-index undominated strategy dominating y. Throws if y is
// undominated.
int find_dominator(const ModifiedGameView& view, int player, int y);

}  // namespace gimpl

#endif  // GIMPL_DOMINATION_H_
