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

#include "gimpl/game.h"

#include <algorithm>
#include <limits>
#include <string>

#include "gimpl/error.h"

namespace gimpl {

ProfileSpace::ProfileSpace(std::vector<int> radices)
    : radices_(std::move(radices)), strides_(radices_.size()) {
  size_ = 1;
  for (int d = dims() - 1; d >= 0; --d) {
    if (radices_[d] < 1) throw Error("profile space with an empty factor");
    strides_[d] = size_;
    if (size_ > kMaxSize / static_cast<std::size_t>(radices_[d])) {
      throw Error("profile space too large to enumerate");
    }
    size_ *= static_cast<std::size_t>(radices_[d]);
  }
}

std::size_t ProfileSpace::index(std::span<const int> profile) const {
  if (!contains(profile)) throw Error("profile out of range");
  std::size_t idx = 0;
  for (int d = 0; d < dims(); ++d) {
    idx += strides_[d] * static_cast<std::size_t>(profile[d]);
  }
  return idx;
}

Profile ProfileSpace::profile(std::size_t index) const {
  Profile p(radices_.size());
  for (int d = 0; d < dims(); ++d) {
    p[d] = static_cast<int>(index / strides_[d]);
    index %= strides_[d];
  }
  return p;
}

bool ProfileSpace::contains(std::span<const int> profile) const {
  if (profile.size() != radices_.size()) return false;
  for (int d = 0; d < dims(); ++d) {
    if (profile[d] < 0 || profile[d] >= radices_[d]) return false;
  }
  return true;
}

bool ProfileSpace::next(Profile& profile) const {
  for (int d = dims() - 1; d >= 0; --d) {
    if (++profile[d] < radices_[d]) return true;
    profile[d] = 0;
  }
  return false;
}

namespace {

void check_players(const std::vector<PlayerInfo>& players) {
  if (players.empty()) throw Error("a game needs at least one player");
  for (const auto& p : players) {
    if (p.strategies.empty()) {
      throw Error("player '" + p.name + "' has no strategies");
    }
  }
}

std::vector<int> counts_of(const std::vector<PlayerInfo>& players) {
  std::vector<int> counts;
  counts.reserve(players.size());
  for (const auto& p : players) {
    counts.push_back(static_cast<int>(p.strategies.size()));
  }
  return counts;
}

void check_player_index(int player, int n) {
  if (player < 0 || player >= n) {
    throw Error("player index " + std::to_string(player) + " out of range");
  }
}

}  // namespace

Game::Game(std::vector<PlayerInfo> players) : players_(std::move(players)) {
  check_players(players_);
  space_ = ProfileSpace(counts_of(players_));
  utilities_.assign(players_.size(), std::vector<Rational>(space_.size()));
}

int Game::num_strategies(int player) const {
  return static_cast<int>(players_.at(player).strategies.size());
}

const Rational& Game::utility(int player, std::span<const int> profile) const {
  check_player_index(player, num_players());
  return utilities_[player][space_.index(profile)];
}

void Game::set_utility(int player, std::span<const int> profile,
                       Rational value) {
  check_player_index(player, num_players());
  utilities_[player][space_.index(profile)] = std::move(value);
}

Rational Game::max_utility() const {
  Rational best = utilities_.front().front();
  for (const auto& table : utilities_) {
    for (const auto& u : table) best = std::max(best, u);
  }
  return best;
}

GraphicalGame::GraphicalGame(std::vector<PlayerInfo> players,
                             std::vector<std::pair<int, int>> edges)
    : players_(std::move(players)) {
  check_players(players_);
  const int n = num_players();
  for (auto [a, b] : edges) {
    check_player_index(a, n);
    check_player_index(b, n);
    if (a == b) throw Error("self-loop at player " + std::to_string(a));
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error("duplicate edge");
  }
  neighbors_.assign(n, {});
  for (auto [a, b] : edges_) {
    neighbors_[a].push_back(b);
    neighbors_[b].push_back(a);
  }
  for (int i = 0; i < n; ++i) {
    auto& nb = neighbors_[i];
    std::sort(nb.begin(), nb.end());
    std::vector<int> radices{num_strategies(i)};
    for (int j : nb) radices.push_back(num_strategies(j));
    local_spaces_.emplace_back(std::move(radices));
    utilities_.emplace_back(local_spaces_.back().size());
  }
}

int GraphicalGame::num_strategies(int player) const {
  return static_cast<int>(players_.at(player).strategies.size());
}

int GraphicalGame::max_degree() const {
  int best = 0;
  for (int i = 0; i < num_players(); ++i) best = std::max(best, degree(i));
  return best;
}

Profile GraphicalGame::local_profile(int player,
                                     std::span<const int> full) const {
  check_player_index(player, num_players());
  if (static_cast<int>(full.size()) != num_players()) {
    throw Error("full profile has wrong length");
  }
  Profile local{full[player]};
  for (int j : neighbors_[player]) local.push_back(full[j]);
  return local;
}

const Rational& GraphicalGame::utility(int player,
                                       std::span<const int> local) const {
  check_player_index(player, num_players());
  return utilities_[player][local_spaces_[player].index(local)];
}

void GraphicalGame::set_utility(int player, std::span<const int> local,
                                Rational value) {
  check_player_index(player, num_players());
  utilities_[player][local_spaces_[player].index(local)] = std::move(value);
}

Game expand_graphical(const GraphicalGame& gg) {
  Game game(gg.players());
  const auto& space = game.space();
  Profile x(space.dims(), 0);
  do {
    for (int i = 0; i < gg.num_players(); ++i) {
      const Rational& u = gg.utility_at(i, x);
      if (u != 0) game.set_utility(i, x, u);
    }
  } while (space.next(x));
  return game;
}

RectRegion::RectRegion(std::vector<std::vector<int>> sets)
    : sets_(std::move(sets)) {
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

RectRegion RectRegion::full(const std::vector<int>& num_strategies) {
  std::vector<std::vector<int>> sets;
  for (int k : num_strategies) {
    std::vector<int> all(k);
    for (int s = 0; s < k; ++s) all[s] = s;
    sets.push_back(std::move(all));
  }
  return RectRegion(std::move(sets));
}

bool RectRegion::contains(int player, int strategy) const {
  const auto& s = sets_.at(player);
  return std::binary_search(s.begin(), s.end(), strategy);
}

bool RectRegion::contains(std::span<const int> profile) const {
  if (profile.size() != sets_.size()) return false;
  for (int i = 0; i < num_players(); ++i) {
    if (!contains(i, profile[i])) return false;
  }
  return true;
}

std::uint64_t RectRegion::size() const {
  std::uint64_t n = 1;
  for (const auto& s : sets_) {
    if (n > std::numeric_limits<std::uint64_t>::max() / (s.size() + 1)) {
      throw Error("region size overflow");
    }
    n *= s.size();
  }
  return n;
}

void RectRegion::validate(const std::vector<int>& num_strategies) const {
  if (sets_.size() != num_strategies.size()) {
    throw Error("region has " + std::to_string(sets_.size()) +
                " sets but the game has " +
                std::to_string(num_strategies.size()) + " players");
  }
  for (int i = 0; i < num_players(); ++i) {
    if (sets_[i].empty()) {
      throw Error("empty desired set for player " + std::to_string(i));
    }
    if (sets_[i].front() < 0 || sets_[i].back() >= num_strategies[i]) {
      throw Error("desired strategy index out of range for player " +
                  std::to_string(i));
    }
  }
}

std::vector<int> strategy_counts(const Game& game) {
  return counts_of(game.players());
}

std::vector<int> strategy_counts(const GraphicalGame& game) {
  return counts_of(game.players());
}

}  // namespace gimpl
