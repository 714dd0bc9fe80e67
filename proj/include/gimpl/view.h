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

#ifndef GIMPL_VIEW_H_
#define GIMPL_VIEW_H_

#include <cstddef>
#include <vector>

#include "gimpl/ext_value.h"
#include "gimpl/game.h"
#include "gimpl/promise.h"

namespace gimpl {

// Player i's modified payoffs [U_i + V_i] laid out as a matrix: one row per
// own strategy, one column per profile of the players in `scope` (all other
// players for a normal-form game, the neighbors for a graphical game).
struct PlayerTable {
  std::vector<int> scope;
  ProfileSpace context;
  int rows = 0;
  std::vector<ExtValue> payoff;
  std::vector<ExtValue> promise;

  std::size_t cols() const { return context.size(); }
  const ExtValue& at(int row, std::size_t col) const {
    return payoff[static_cast<std::size_t>(row) * cols() + col];
  }
  const ExtValue& promise_at(int row, std::size_t col) const {
    return promise[static_cast<std::size_t>(row) * cols() + col];
  }
  // Column of a full profile.
  std::size_t column(std::span<const int> full) const;
};

// The modified game G[V], materialized per player. Owns its data, so it
// may outlive the game and promise it was built from.
class ModifiedGameView {
 public:
  explicit ModifiedGameView(const Game& game);
  ModifiedGameView(const Game& game, const PaymentPromise& promise);
  explicit ModifiedGameView(const GraphicalGame& game);
  ModifiedGameView(const GraphicalGame& game, const PaymentPromise& promise);

  int num_players() const { return static_cast<int>(tables_.size()); }
  int num_strategies(int player) const { return tables_.at(player).rows; }
  std::vector<int> strategy_counts() const;
  bool graphical() const { return graphical_; }
  const PlayerTable& table(int player) const { return tables_.at(player); }

  ExtValue modified_utility(int player, std::span<const int> full) const;
  ExtValue promise_value(int player, std::span<const int> full) const;

 private:
  std::vector<PlayerTable> tables_;
  bool graphical_ = false;
};

// [U_i + V_i](x).
inline ExtValue modified_utility(const ModifiedGameView& view, int player,
                                 std::span<const int> profile) {
  return view.modified_utility(player, profile);
}

}  // namespace gimpl

#endif  // GIMPL_VIEW_H_
