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

#ifndef GIMPL_TESTS_SUPPORT_H_
#define GIMPL_TESTS_SUPPORT_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gimpl/ext_value.h"
#include "gimpl/game.h"
#include "gimpl/promise.h"

namespace gimpl::testing {

// Three strategies for p1, two for p2.
inline Game make_ex1() {
  Game g({{"p1", {"s1", "s2", "s3"}}, {"p2", {"t1", "t2"}}});
  const int u1[3][2] = {{1, 1}, {2, 0}, {0, 1}};
  const int u2[3][2] = {{1, 1}, {1, 1}, {0, 0}};
  for (int s = 0; s < 3; ++s) {
    for (int t = 0; t < 2; ++t) {
      g.set_utility(0, std::vector<int>{s, t}, Rational(u1[s][t]));
      g.set_utility(1, std::vector<int>{s, t}, Rational(u2[s][t]));
    }
  }
  return g;
}

// V_1(s1,t1) = 1 and V_2(s1,t1) = 1/10.
inline PaymentPromise ex1_promise_v() {
  PaymentPromise v(2);
  v.set(0, {0, 0}, ExtValue(1));
  v.set(1, {0, 0}, ExtValue(Rational(1, 10)));
  return v;
}

// Same V_1, but V_2(s2,t1) = 1/10.
inline PaymentPromise ex1_promise_vprime() {
  PaymentPromise v(2);
  v.set(0, {0, 0}, ExtValue(1));
  v.set(1, {1, 0}, ExtValue(Rational(1, 10)));
  return v;
}

inline RectRegion ex1_region() { return RectRegion({{0, 2}, {0}}); }

// Symmetric 2x2 game where s1 dominates s2 for both players.
inline Game make_ce1() {
  Game g({{"p1", {"s1", "s2"}}, {"p2", {"s1", "s2"}}});
  const int u[2][2] = {{2, 1}, {1, 0}};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      g.set_utility(0, std::vector<int>{a, b}, Rational(u[a][b]));
      g.set_utility(1, std::vector<int>{a, b}, Rational(u[b][a]));
    }
  }
  return g;
}

inline RectRegion ce1_region() { return RectRegion({{0, 1}, {0}}); }

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Game random_game(std::mt19937_64& rng, int min_players,
                        int max_players, int min_strategies,
                        int max_strategies, int max_utility) {
  const int n = uniform(rng, min_players, max_players);
  std::vector<PlayerInfo> players;
  for (int i = 0; i < n; ++i) {
    PlayerInfo p{"p" + std::to_string(i), {}};
    const int k = uniform(rng, min_strategies, max_strategies);
    for (int s = 0; s < k; ++s) p.strategies.push_back("x" + std::to_string(s));
    players.push_back(std::move(p));
  }
  Game g(std::move(players));
  Profile x(n, 0);
  do {
    for (int i = 0; i < n; ++i) {
      g.set_utility(i, x, Rational(uniform(rng, 0, max_utility)));
    }
  } while (g.space().next(x));
  return g;
}

// Random nonempty subset of 0..k-1.
inline std::vector<int> random_subset(std::mt19937_64& rng, int k) {
  std::vector<int> out;
  while (out.empty()) {
    for (int s = 0; s < k; ++s) {
      if (uniform(rng, 0, 1)) out.push_back(s);
    }
  }
  return out;
}

// Either the full region, or one where at least two players are
// restricted, so every restricted player sees an off-region profile.
inline RectRegion random_region(std::mt19937_64& rng,
                                const std::vector<int>& counts) {
  const int n = static_cast<int>(counts.size());
  for (;;) {
    std::vector<std::vector<int>> sets;
    int restricted = 0;
    for (int i = 0; i < n; ++i) {
      sets.push_back(random_subset(rng, counts[i]));
      if (static_cast<int>(sets.back().size()) < counts[i]) ++restricted;
    }
    if (restricted == 0 || restricted >= 2) return RectRegion(std::move(sets));
  }
}

// Definition-level check on a normal-form game, independent of the view
// tables: x dominates y for player i under U + V.
inline bool raw_dominates(const Game& game, const PaymentPromise& promise,
                          int i, int x, int y) {
  bool strict = false;
  Profile p(game.num_players(), 0);
  do {
    if (p[i] != 0) continue;
    Profile px = p;
    Profile py = p;
    px[i] = x;
    py[i] = y;
    ExtValue a = ExtValue(game.utility(i, px)) + promise.get(i, px);
    ExtValue b = ExtValue(game.utility(i, py)) + promise.get(i, py);
    if (a < b) return false;
    if (a > b) strict = true;
  } while (game.space().next(p));
  return strict;
}

}  // namespace gimpl::testing

#endif  // GIMPL_TESTS_SUPPORT_H_
