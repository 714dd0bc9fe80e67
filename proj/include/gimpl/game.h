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

#ifndef GIMPL_GAME_H_
#define GIMPL_GAME_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gimpl/ext_value.h"

namespace gimpl {

// One strategy index per player (or per coordinate of a sub-space).
using Profile = std::vector<int>;

// Mixed-radix enumeration of a product of index sets. The last coordinate
// varies fastest, so linear order coincides with lexicographic order.
class ProfileSpace {
 public:
  // Largest space we are willing to enumerate densely.
  static constexpr std::size_t kMaxSize = std::size_t{1} << 28;

  ProfileSpace() = default;
  explicit ProfileSpace(std::vector<int> radices);

  std::size_t size() const { return size_; }
  int dims() const { return static_cast<int>(radices_.size()); }
  const std::vector<int>& radices() const { return radices_; }
  std::size_t stride(int dim) const { return strides_[dim]; }

  std::size_t index(std::span<const int> profile) const;
  Profile profile(std::size_t index) const;
  bool contains(std::span<const int> profile) const;

  // Advances `profile` lexicographically; false after the last one.
  bool next(Profile& profile) const;

 private:
  std::vector<int> radices_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

struct PlayerInfo {
  std::string name;
  std::vector<std::string> strategies;
};

// A finite game in normal form with exact rational utilities.
class Game {
 public:
  Game() = default;
  // All utilities start at 0.
  explicit Game(std::vector<PlayerInfo> players);

  int num_players() const { return static_cast<int>(players_.size()); }
  int num_strategies(int player) const;
  const PlayerInfo& player(int i) const { return players_.at(i); }
  const std::vector<PlayerInfo>& players() const { return players_; }
  const ProfileSpace& space() const { return space_; }

  const Rational& utility(int player, std::span<const int> profile) const;
  const Rational& utility(int player, std::size_t linear) const {
    return utilities_[player][linear];
  }
  void set_utility(int player, std::span<const int> profile, Rational value);

  // Largest utility over all players and profiles.
  Rational max_utility() const;

 private:
  std::vector<PlayerInfo> players_;
  ProfileSpace space_;
  std::vector<std::vector<Rational>> utilities_;
};

// A game on an undirected graph whose utilities (and promises) are local:
// player i's table ranges over X_i x X_{j_1} x ... x X_{j_k} with the
// neighbors j_1 < ... < j_k in ascending order.
class GraphicalGame {
 public:
  GraphicalGame() = default;
  GraphicalGame(std::vector<PlayerInfo> players,
                std::vector<std::pair<int, int>> edges);

  int num_players() const { return static_cast<int>(players_.size()); }
  int num_strategies(int player) const;
  const PlayerInfo& player(int i) const { return players_.at(i); }
  const std::vector<PlayerInfo>& players() const { return players_; }

  // Normalized: each edge stored once as (min, max), sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int player) const {
    return neighbors_.at(player);
  }
  int degree(int player) const {
    return static_cast<int>(neighbors(player).size());
  }
  int max_degree() const;

  const ProfileSpace& local_space(int player) const {
    return local_spaces_.at(player);
  }
  // Projects a full profile onto (own strategy, neighbor strategies).
  Profile local_profile(int player, std::span<const int> full) const;

  const Rational& utility(int player, std::span<const int> local) const;
  const Rational& utility_at(int player, std::span<const int> full) const {
    return utility(player, local_profile(player, full));
  }
  void set_utility(int player, std::span<const int> local, Rational value);

 private:
  std::vector<PlayerInfo> players_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<ProfileSpace> local_spaces_;
  std::vector<std::vector<Rational>> utilities_;
};

// Normal-form game with U_i(x) = local utility of i at x restricted to
// {i} and its neighbors.
Game expand_graphical(const GraphicalGame& gg);

// O_1 x ... x O_n. Each set is kept sorted and duplicate-free.
class RectRegion {
 public:
  RectRegion() = default;
  explicit RectRegion(std::vector<std::vector<int>> sets);

  static RectRegion full(const std::vector<int>& num_strategies);

  int num_players() const { return static_cast<int>(sets_.size()); }
  const std::vector<int>& set(int player) const { return sets_.at(player); }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  bool contains(int player, int strategy) const;
  bool contains(std::span<const int> profile) const;
  std::uint64_t size() const;

  // Throws unless the region has one nonempty in-range set per player.
  void validate(const std::vector<int>& num_strategies) const;

  friend bool operator==(const RectRegion&, const RectRegion&) = default;

 private:
  std::vector<std::vector<int>> sets_;
};

std::vector<int> strategy_counts(const Game& game);
std::vector<int> strategy_counts(const GraphicalGame& game);

}  // namespace gimpl

#endif  // GIMPL_GAME_H_
