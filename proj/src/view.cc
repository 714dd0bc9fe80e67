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

#include "gimpl/view.h"

#include "gimpl/error.h"

namespace gimpl {

std::size_t PlayerTable::column(std::span<const int> full) const {
  std::size_t c = 0;
  for (int k = 0; k < context.dims(); ++k) {
    c += context.stride(k) * static_cast<std::size_t>(full[scope[k]]);
  }
  return c;
}

namespace {

// Table of player i over the given scope; utilities and promises are filled
// by the callers.
PlayerTable empty_table(const std::vector<int>& counts, int player,
                        std::vector<int> scope) {
  PlayerTable t;
  std::vector<int> radices;
  for (int j : scope) radices.push_back(counts[j]);
  t.scope = std::move(scope);
  t.context = ProfileSpace(std::move(radices));
  t.rows = counts[player];
  t.payoff.resize(static_cast<std::size_t>(t.rows) * t.cols());
  t.promise.resize(t.payoff.size());
  return t;
}

std::vector<PlayerTable> normal_tables(const Game& game,
                                       const PaymentPromise* promise) {
  if (promise != nullptr) validate_promise(game, *promise);
  const auto counts = strategy_counts(game);
  const int n = game.num_players();
  std::vector<PlayerTable> tables;
  for (int i = 0; i < n; ++i) {
    std::vector<int> scope;
    for (int j = 0; j < n; ++j) {
      if (j != i) scope.push_back(j);
    }
    tables.push_back(empty_table(counts, i, std::move(scope)));
  }
  const auto& space = game.space();
  Profile x(n, 0);
  std::size_t linear = 0;
  do {
    for (int i = 0; i < n; ++i) {
      auto& t = tables[i];
      t.payoff[x[i] * t.cols() + t.column(x)] = game.utility(i, linear);
    }
    ++linear;
  } while (space.next(x));
  if (promise != nullptr) {
    for (int i = 0; i < n; ++i) {
      auto& t = tables[i];
      for (const auto& [key, value] : promise->entries(i)) {
        const std::size_t cell = key[i] * t.cols() + t.column(key);
        t.promise[cell] = value;
        t.payoff[cell] += value;
      }
    }
  }
  return tables;
}

std::vector<PlayerTable> graphical_tables(const GraphicalGame& game,
                                          const PaymentPromise* promise) {
  if (promise != nullptr) validate_promise(game, *promise);
  const auto counts = strategy_counts(game);
  std::vector<PlayerTable> tables;
  for (int i = 0; i < game.num_players(); ++i) {
    auto t = empty_table(counts, i, game.neighbors(i));
    // Local space is (own, neighbors...) so its linear order is row-major
    // over (own strategy, neighbor context): same layout as the table.
    const auto& local = game.local_space(i);
    Profile key(local.dims(), 0);
    std::size_t linear = 0;
    do {
      t.payoff[linear] = game.utility(i, key);
      ++linear;
    } while (local.next(key));
    if (promise != nullptr) {
      for (const auto& [k, value] : promise->entries(i)) {
        const std::size_t cell = local.index(k);
        t.promise[cell] = value;
        t.payoff[cell] += value;
      }
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

}  // namespace

ModifiedGameView::ModifiedGameView(const Game& game)
    : tables_(normal_tables(game, nullptr)) {}

ModifiedGameView::ModifiedGameView(const Game& game,
                                   const PaymentPromise& promise)
    : tables_(normal_tables(game, &promise)) {}

ModifiedGameView::ModifiedGameView(const GraphicalGame& game)
    : tables_(graphical_tables(game, nullptr)), graphical_(true) {}

ModifiedGameView::ModifiedGameView(const GraphicalGame& game,
                                   const PaymentPromise& promise)
    : tables_(graphical_tables(game, &promise)), graphical_(true) {}

std::vector<int> ModifiedGameView::strategy_counts() const {
  std::vector<int> counts;
  for (const auto& t : tables_) counts.push_back(t.rows);
  return counts;
}

ExtValue ModifiedGameView::modified_utility(int player,
                                            std::span<const int> full) const {
  const auto& t = tables_.at(player);
  if (static_cast<int>(full.size()) != num_players()) {
    throw Error("full profile has wrong length");
  }
  return t.at(full[player], t.column(full));
}

ExtValue ModifiedGameView::promise_value(int player,
                                         std::span<const int> full) const {
  const auto& t = tables_.at(player);
  if (static_cast<int>(full.size()) != num_players()) {
    throw Error("full profile has wrong length");
  }
  return t.promise_at(full[player], t.column(full));
}

}  // namespace gimpl
