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

#include "gimpl/domination.h"

#include <string>

#include "gimpl/error.h"

namespace gimpl {
namespace {

// Column of the first strict improvement of row x over row y, or -1 if x
// does not dominate y.
long long dominance_column(const PlayerTable& t, int x, int y) {
  long long strict = -1;
  for (std::size_t c = 0; c < t.cols(); ++c) {
    const auto cmp = t.at(x, c) <=> t.at(y, c);
    if (cmp < 0) return -1;
    if (cmp > 0 && strict < 0) strict = static_cast<long long>(c);
  }
  return strict;
}

void check_strategy(const ModifiedGameView& view, int player, int s) {
  if (player < 0 || player >= view.num_players()) {
    throw Error("player index " + std::to_string(player) + " out of range");
  }
  if (s < 0 || s >= view.num_strategies(player)) {
    throw Error("strategy index " + std::to_string(s) +
                " out of range for player " + std::to_string(player));
  }
}

}  // namespace

std::optional<DominanceWitness> dominates(const ModifiedGameView& view,
                                          int player, int x, int y) {
  check_strategy(view, player, x);
  check_strategy(view, player, y);
  if (x == y) throw Error("a strategy cannot dominate itself");
  const auto& t = view.table(player);
  const long long c = dominance_column(t, x, y);
  if (c < 0) return std::nullopt;
  return DominanceWitness{player, x, y, t.scope,
                          t.context.profile(static_cast<std::size_t>(c))};
}

std::vector<int> undominated(const ModifiedGameView& view, int player) {
  check_strategy(view, player, 0);
  const auto& t = view.table(player);
  std::vector<int> result;
  for (int y = 0; y < t.rows; ++y) {
    bool dominated = false;
    for (int x = 0; x < t.rows && !dominated; ++x) {
      dominated = x != y && dominance_column(t, x, y) >= 0;
    }
    if (!dominated) result.push_back(y);
  }
  return result;
}

RectRegion undominated_region(const ModifiedGameView& view) {
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < view.num_players(); ++i) {
    sets.push_back(undominated(view, i));
  }
  return RectRegion(std::move(sets));
}

int find_dominator(const ModifiedGameView& view, int player, int y) {
  check_strategy(view, player, y);
  const auto& t = view.table(player);
  for (int x : undominated(view, player)) {
    if (x != y && dominance_column(t, x, y) >= 0) return x;
  }
  throw Error("strategy " + std::to_string(y) + " of player " +
              std::to_string(player) + " is undominated");
}

}  // namespace gimpl
