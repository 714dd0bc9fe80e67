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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "gimpl/domination.h"
#include "gimpl/error.h"
#include "gimpl/implementation.h"
#include "gimpl/view.h"
#include "support.h"

namespace gimpl {
namespace {

using testing::make_ce1;
using testing::make_ex1;
using testing::uniform;

TEST_CASE("dominates on EX1") {
  ModifiedGameView view(make_ex1());
  auto w = dominates(view, 0, 0, 2);
  REQUIRE(w.has_value());
  CHECK(w->strict_at == Profile{0});
  CHECK(w->scope == std::vector<int>{1});
  CHECK_FALSE(dominates(view, 1, 0, 1).has_value());
  CHECK_FALSE(dominates(view, 1, 1, 0).has_value());
  CHECK_FALSE(dominates(view, 0, 0, 1).has_value());
  CHECK_THROWS_AS(dominates(view, 0, 1, 1), Error);
  CHECK_THROWS_AS(dominates(view, 0, 0, 3), Error);
}

TEST_CASE("undominated sets on EX1") {
  Game g = make_ex1();
  ModifiedGameView plain(g);
  CHECK(undominated(plain, 0) == std::vector<int>{0, 1});
  CHECK(undominated(plain, 1) == std::vector<int>{0, 1});
  CHECK(undominated_region(plain) == RectRegion({{0, 1}, {0, 1}}));
  ModifiedGameView v(g, testing::ex1_promise_v());
  CHECK(undominated(v, 0) == std::vector<int>{0});
  CHECK(undominated(v, 1) == std::vector<int>{0});
  ModifiedGameView vp(g, testing::ex1_promise_vprime());
  CHECK(undominated_region(vp) == RectRegion({{0}, {0}}));
}

TEST_CASE("single strategy per player leaves the full region") {
  Game g({{"a", {"x"}}, {"b", {"y"}}, {"c", {"z"}}});
  CHECK(undominated_region(ModifiedGameView(g)) ==
        RectRegion({{0}, {0}, {0}}));
}

TEST_CASE("find_dominator") {
  CHECK(find_dominator(ModifiedGameView(make_ex1()), 0, 2) == 0);
  CHECK(find_dominator(ModifiedGameView(make_ce1()), 0, 1) == 0);
  CHECK_THROWS_WITH_AS(find_dominator(ModifiedGameView(make_ex1()), 1, 0),
                       doctest::Contains("undominated"), Error);
}

TEST_CASE("domination laws and witness validity on random games") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    Game g = testing::random_game(rng, 2, 3, 2, 4, 4);
    PaymentPromise v(g.num_players());
    if (trial % 2) {
      Profile x(g.num_players(), 0);
      do {
        int roll = uniform(rng, 0, 7);
        if (roll == 0) v.set(0, x, ExtValue::infinity());
        if (roll == 1) v.set(1, x, ExtValue(uniform(rng, 1, 3)));
      } while (g.space().next(x));
    }
    ModifiedGameView view(g, v);
    for (int i = 0; i < g.num_players(); ++i) {
      const int k = g.num_strategies(i);
      CHECK_FALSE(undominated(view, i).empty());
      for (int x = 0; x < k; ++x) {
        for (int y = 0; y < k; ++y) {
          if (x == y) continue;
          auto w = dominates(view, i, x, y);
          CHECK(w.has_value() == testing::raw_dominates(g, v, i, x, y));
          if (w) {
            CHECK_FALSE(dominates(view, i, y, x).has_value());
            Profile at(g.num_players());
            for (std::size_t s = 0; s < w->scope.size(); ++s) {
              at[w->scope[s]] = w->strict_at[s];
            }
            at[i] = x;
            ExtValue hi = view.modified_utility(i, at);
            at[i] = y;
            CHECK(hi > view.modified_utility(i, at));
          }
          for (int z = 0; z < k; ++z) {
            if (z == x || z == y) continue;
            if (w && dominates(view, i, y, z)) {
              CHECK(dominates(view, i, x, z).has_value());
            }
          }
        }
        const auto survivors = undominated(view, i);
        if (std::find(survivors.begin(), survivors.end(), x) ==
            survivors.end()) {
          int d = find_dominator(view, i, x);
          CHECK(dominates(view, i, d, x).has_value());
        }
      }
    }
  }
}

TEST_CASE("graphical and expanded views agree") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform(rng, 2, 6);
    std::vector<PlayerInfo> players;
    for (int i = 0; i < n; ++i) {
      PlayerInfo p{"p" + std::to_string(i), {}};
      for (int s = uniform(rng, 1, 3); s > 0; --s) {
        p.strategies.push_back("x" + std::to_string(s));
      }
      players.push_back(std::move(p));
    }
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (uniform(rng, 0, 2) == 0) edges.emplace_back(a, b);
      }
    }
    GraphicalGame gg(players, edges);
    PaymentPromise v(n, PromiseForm::kGraphical);
    for (int i = 0; i < n; ++i) {
      Profile local(gg.local_space(i).dims(), 0);
      do {
        gg.set_utility(i, local, Rational(uniform(rng, 0, 3)));
        if (uniform(rng, 0, 5) == 0) v.set(i, local, ExtValue(1));
      } while (gg.local_space(i).next(local));
    }
    Game g = expand_graphical(gg);
    PaymentPromise expanded_v(n);
    Profile x(n, 0);
    do {
      for (int i = 0; i < n; ++i) {
        expanded_v.set(i, x, v.get(i, gg.local_profile(i, x)));
      }
    } while (g.space().next(x));
    ModifiedGameView local_view(gg, v);
    ModifiedGameView full_view(g, expanded_v);
    for (int i = 0; i < n; ++i) {
      CHECK(undominated(local_view, i) == undominated(full_view, i));
    }
    CHECK(cost(local_view) == cost(full_view));
  }
}

TEST_CASE("cost on EX1") {
  Game g = make_ex1();
  CHECK(cost(g, testing::ex1_promise_v()) == ExtValue(Rational(11, 10)));
  CHECK(cost(g, testing::ex1_promise_vprime()) == ExtValue(1));
  CHECK(cost(g, PaymentPromise(2)) == ExtValue(0));
}

TEST_CASE("cost ignores payments on dominated profiles") {
  Game g = make_ex1();
  PaymentPromise v = testing::ex1_promise_vprime();
  v.set(0, {2, 0}, ExtValue(Rational(1, 2)));
  v.set(1, {2, 0}, ExtValue::infinity());
  CHECK(cost(g, v) == ExtValue(1));
  PaymentPromise inf(2);
  inf.set(0, {0, 0}, ExtValue::infinity());
  CHECK(cost(g, inf).is_infinite());
}

TEST_CASE("verify on EX1 and CE1") {
  Game g = make_ex1();
  auto region = testing::ex1_region();
  auto r = verify(g, testing::ex1_promise_v(), region,
                  ExtValue(Rational(11, 10)), VerifyMode::kSubset);
  CHECK(r.holds);
  CHECK(r.cost == ExtValue(Rational(11, 10)));
  auto tight = verify(g, testing::ex1_promise_v(), region, ExtValue(1),
                      VerifyMode::kSubset);
  CHECK_FALSE(tight.holds);
  CHECK_FALSE(tight.violation.has_value());
  auto exact = verify(g, testing::ex1_promise_v(), region,
                      ExtValue(Rational(11, 10)), VerifyMode::kExact);
  CHECK_FALSE(exact.holds);
  REQUIRE(exact.violation.has_value());
  CHECK(exact.violation->player == 0);
  CHECK(exact.violation->strategy == 2);
  CHECK_FALSE(exact.violation->undesired_survivor);

  auto ce = verify(make_ce1(), PaymentPromise(2), testing::ce1_region(),
                   ExtValue(0), VerifyMode::kExact);
  CHECK_FALSE(ce.holds);
  REQUIRE(ce.violation.has_value());
  CHECK(ce.violation->player == 0);
  CHECK(ce.violation->strategy == 1);

  auto plain = verify(g, PaymentPromise(2), region, ExtValue(0),
                      VerifyMode::kSubset);
  CHECK_FALSE(plain.holds);
  REQUIRE(plain.violation.has_value());
  CHECK(plain.violation->undesired_survivor);
  CHECK(plain.violation->strategy == 1);
  CHECK_THROWS_AS(verify(g, PaymentPromise(2), RectRegion(std::vector<std::vector<int>>{{0}}), ExtValue(0),
                         VerifyMode::kSubset),
                  Error);
}

TEST_CASE("infinite budget decouples verify from cost") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    Game g = testing::random_game(rng, 2, 3, 2, 3, 4);
    auto counts = strategy_counts(g);
    RectRegion region = testing::random_region(rng, counts);
    PaymentPromise v(g.num_players());
    Profile x(g.num_players(), 0);
    do {
      if (uniform(rng, 0, 3) == 0) v.set(0, x, ExtValue(uniform(rng, 1, 5)));
    } while (g.space().next(x));
    auto r = verify(g, v, region, ExtValue::infinity(), VerifyMode::kSubset);
    ModifiedGameView view(g, v);
    RectRegion star = undominated_region(view);
    bool inside = true;
    for (int i = 0; i < g.num_players(); ++i) {
      for (int s : star.set(i)) inside = inside && region.contains(i, s);
    }
    CHECK(r.holds == inside);
    CHECK(r.undominated_region == star);
  }
}

}  // namespace
}  // namespace gimpl
