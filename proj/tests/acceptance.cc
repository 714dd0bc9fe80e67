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

// Acceptance suite. Prints one line per criterion; exits nonzero if any
// selected criterion fails. `--criterion N` runs a single one.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gimpl/domination.h"
#include "gimpl/implementation.h"
#include "gimpl/oracle.h"
#include "gimpl/reductions.h"
#include "gimpl/solver.h"
#include "gimpl/view.h"
#include "support.h"

namespace gimpl {
namespace {

using testing::uniform;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

ExtValue max_over_region(const Game& game, const PaymentPromise& v,
                         const RectRegion& region) {
  ExtValue best(0);
  Profile x(game.num_players(), 0);
  do {
    if (!region.contains(x)) continue;
    ExtValue sum;
    for (int i = 0; i < game.num_players(); ++i) sum += v.get(i, x);
    best = std::max(best, sum);
  } while (game.space().next(x));
  return best;
}

void worked_example(Outcome& out) {
  Game g = testing::make_ex1();
  RectRegion region = testing::ex1_region();
  ModifiedGameView plain(g);
  out.require(undominated(plain, 0) == std::vector<int>{0, 1},
              "X_1* = {s1, s2}");
  out.require(undominated(plain, 1) == std::vector<int>{0, 1},
              "X_2* = {t1, t2}");
  auto v = verify(g, testing::ex1_promise_v(), region,
                  ExtValue(Rational(11, 10)), VerifyMode::kSubset);
  out.require(v.holds, "V implements O");
  out.require(v.cost == ExtValue(Rational(11, 10)), "cost(V) = 11/10");
  auto vp = verify(g, testing::ex1_promise_vprime(), region, ExtValue(1),
                   VerifyMode::kSubset);
  out.require(vp.holds, "V' implements O");
  out.require(vp.cost == ExtValue(1), "cost(V') = 1");
  auto vpx = verify(g, testing::ex1_promise_vprime(), region, ExtValue(1),
                    VerifyMode::kExact);
  out.require(!vpx.holds, "V' is not exact");
  out.detail << "cost(V)=" << v.cost << " cost(V')=" << vp.cost;
}

void solver_example(Outcome& out) {
  SolveResult r = min_budget_solve(testing::make_ex1(), testing::ex1_region());
  out.require(r.delta == ExtValue(1), "delta = 1");
  out.require(r.mapping.targets[0] == std::map<int, int>{{1, 0}},
              "F_1(s2) = s1");
  out.detail << "delta=" << r.delta;
}

void counterexample(Outcome& out) {
  auto r = verify(testing::make_ce1(), PaymentPromise(2),
                  testing::ce1_region(), ExtValue(0), VerifyMode::kExact);
  out.require(!r.holds, "zero promise is not exact");
  out.require(r.violation.has_value() && r.violation->player == 0 &&
                  r.violation->strategy == 1 &&
                  !r.violation->undesired_survivor,
              "violation is (player 1, s2)");
  out.detail << "violation at player " << (r.violation ? r.violation->player + 1 : 0)
             << " strategy s" << (r.violation ? r.violation->strategy + 1 : 0);
}

void domination_laws(Outcome& out) {
  std::mt19937_64 rng(4001);
  int violations = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Game g = testing::random_game(rng, 2, 3, 2, 4, 4);
    ModifiedGameView view(g);
    for (int i = 0; i < g.num_players(); ++i) {
      const int k = g.num_strategies(i);
      const auto survivors = undominated(view, i);
      if (survivors.empty()) ++violations;
      std::vector<std::vector<bool>> dom(k, std::vector<bool>(k, false));
      for (int x = 0; x < k; ++x) {
        for (int y = 0; y < k; ++y) {
          if (x != y) dom[x][y] = dominates(view, i, x, y).has_value();
        }
      }
      for (int x = 0; x < k; ++x) {
        for (int y = 0; y < k; ++y) {
          if (dom[x][y] && dom[y][x]) ++violations;
          for (int z = 0; z < k; ++z) {
            if (x != z && dom[x][y] && dom[y][z] && !dom[x][z]) ++violations;
          }
        }
        if (std::find(survivors.begin(), survivors.end(), x) ==
            survivors.end()) {
          int d = find_dominator(view, i, x);
          const bool ok =
              dom[d][x] &&
              std::find(survivors.begin(), survivors.end(), d) !=
                  survivors.end();
          if (!ok) ++violations;
        }
      }
    }
  }
  out.require(violations == 0, "no law violations");
  out.detail << "games=2000 violations=" << violations;
}

void oracle_equivalence(Outcome& out) {
  std::mt19937_64 rng(5001);
  int checked = 0, disagreements = 0;
  while (checked < 500) {
    Game g = testing::random_game(rng, 2, 3, 2, 4, 4);
    RectRegion region = testing::random_region(rng, strategy_counts(g));
    if (mapping_count(g, region) > 10'000) continue;
    ++checked;
    SolveResult r = min_budget_solve(g, region);
    OracleResult o = oracle_min_budget(g, region);
    const bool among = std::find(o.all_optimal_mappings.begin(),
                                 o.all_optimal_mappings.end(),
                                 r.mapping) != o.all_optimal_mappings.end();
    if (r.delta != o.delta || !among) ++disagreements;
  }
  out.require(disagreements == 0, "solver matches oracle");
  out.detail << "instances=" << checked << " disagreements=" << disagreements;
}

void pne_equivalence(Outcome& out) {
  std::mt19937_64 rng(6001);
  int disagreements = 0, pne_count = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Game g = testing::random_game(rng, 2, 3, 2, 4, 4);
    RectRegion region = testing::random_region(rng, strategy_counts(g));
    const bool pne = is_pne(ModifiedGameView(g), region).holds;
    const bool oracle = oracle_zero_cost(g, region);
    const bool zero = min_budget_solve(g, region).delta == ExtValue(0);
    if (pne != oracle || pne != zero) ++disagreements;
    pne_count += pne;
  }
  out.require(disagreements == 0, "is_pne == oracle_zero_cost == (delta == 0)");
  out.detail << "pairs=1000 pne=" << pne_count
             << " disagreements=" << disagreements;
}

void exactification(Outcome& out) {
  std::mt19937_64 rng(7001);
  int checked = 0, failures = 0;
  while (checked < 300) {
    Game g = testing::random_game(rng, 2, 3, 3, 4, 4);
    std::vector<std::vector<int>> sets;
    for (int i = 0; i < g.num_players(); ++i) {
      std::vector<int> all(g.num_strategies(i));
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      const int size = uniform(rng, 1, g.num_strategies(i) / 2);
      all.resize(size);
      std::sort(all.begin(), all.end());
      sets.push_back(all);
    }
    RectRegion region(std::move(sets));
    if (!is_equitable(g, region).equitable) continue;
    ++checked;
    SolveResult plain = min_budget_solve(g, region);
    SolveResult exact = solve_exact(g, region);
    const bool ok =
        exact.exactified && exact.delta == plain.delta &&
        verify(g, exact.promise, region, exact.delta, VerifyMode::kExact)
            .holds &&
        max_over_region(g, exact.promise, region) ==
            max_over_region(g, plain.promise, region);
    if (!ok) ++failures;
  }
  out.require(failures == 0, "exact implementation at unchanged delta");
  out.detail << "instances=" << checked << " failures=" << failures;
}

void two_player_x3c(Outcome& out) {
  std::vector<X3CInstance> corpus{gen_x3c(1, 0, Force::kAny)};
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    corpus.push_back(gen_x3c(2 + static_cast<int>(seed % 2), 8000 + seed,
                             seed % 3 == 0 ? Force::kYes : Force::kAny));
  }
  int yes = 0, pne_mismatch = 0, forward_failures = 0;
  for (const auto& inst : corpus) {
    auto cover = brute_x3c(inst);
    auto red = x3c_to_two_player(inst);
    const bool pne = is_pne(ModifiedGameView(red.game), red.region).holds;
    if (pne != cover.has_value()) ++pne_mismatch;
    if (!cover) continue;
    ++yes;
    PaymentPromise v = x3c_forward_promise_2p(inst, *cover);
    bool ok = verify(red.game, v, red.region, ExtValue(0),
                     VerifyMode::kSubset)
                  .holds;
    try {
      ok = ok && is_exact_cover(inst, decode_cover_2p(red.game, v));
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) ++forward_failures;
  }
  out.require(forward_failures == 0,
              "forward promise verifies at 0 and decodes");
  out.require(pne_mismatch == 0, "is_pne(O) == exact cover exists");
  out.detail << "instances=" << corpus.size() << " yes=" << yes
             << " forward_failures=" << forward_failures
             << " pne_mismatches=" << pne_mismatch;
}

void graphical_x3c(Outcome& out) {
  int checked = 0, failures = 0;
  for (int n = 1; n <= 2; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      X3CInstance inst = gen_x3c(n, 9000 + seed, Force::kYes);
      ExactCover cover = *brute_x3c(inst);
      auto red = x3c_to_graphical(inst);
      PaymentPromise v = x3c_forward_promise_graphical(inst, cover, red.budget);
      auto r = verify(red.game, v, red.region, red.budget, VerifyMode::kSubset);
      bool ok = r.holds && r.cost <= ExtValue(Rational(1, 2));
      const int m = inst.num_elements();
      for (int j = 0; j < m; ++j) {
        ok = ok && r.undominated_region.set(m + j).size() == 1;
      }
      try {
        ok = ok && is_exact_cover(inst, decode_cover_graphical(red.game, v));
      } catch (const std::exception&) {
        ok = false;
      }
      ++checked;
      if (!ok) ++failures;
    }
  }
  out.require(failures == 0, "forward promise within 1/2, decodes");
  out.detail << "instances=" << checked << " failures=" << failures;
}

Graph cycle(int n) {
  Graph g{n, {}};
  for (int v = 0; v < n; ++v) g.edges.emplace_back(v, (v + 1) % n);
  return g;
}

void coloring(Outcome& out) {
  Graph petersen = cycle(5);
  for (int v = 0; v < 5; ++v) {
    petersen.edges.emplace_back(v, v + 5);
    petersen.edges.emplace_back(5 + v, 5 + (v + 2) % 5);
  }
  petersen.vertices = 10;
  const std::vector<std::pair<const char*, Graph>> graphs{
      {"K3", Graph{3, {{0, 1}, {1, 2}, {0, 2}}}},
      {"P4", Graph{4, {{0, 1}, {1, 2}, {2, 3}}}},
      {"C5", cycle(5)},
      {"Petersen", petersen}};
  for (const auto& [name, graph] : graphs) {
    auto phi = brute_coloring(graph);
    if (!phi) {
      out.require(false, std::string(name) + " is 3-colorable");
      continue;
    }
    auto red = coloring_to_exact(graph);
    PaymentPromise v = coloring_forward_promise(graph, *phi);
    bool ok = verify(red.game, v, red.region, ExtValue(1), VerifyMode::kExact)
                  .holds;
    try {
      ColoringInstance decoded = decode_coloring(red.game, v);
      ok = ok && is_proper_coloring(graph, *decoded.coloring);
    } catch (const std::exception&) {
      ok = false;
    }
    out.require(ok, std::string(name) + " round trip");
    out.detail << name << (ok ? " ok " : " FAILED ");
  }
  Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  out.require(!brute_coloring(k4).has_value(), "K4 has no 3-coloring");
  out.detail << "K4 none";
}

void runtime_bound(Outcome& out) {
  std::mt19937_64 rng(11001);
  std::vector<std::string> seven, ten;
  for (int s = 0; s < 7; ++s) seven.push_back("x" + std::to_string(s));
  for (int s = 0; s < 10; ++s) ten.push_back("y" + std::to_string(s));
  Game g({{"p1", seven}, {"p2", ten}});
  Profile x{0, 0};
  do {
    g.set_utility(0, x, Rational(uniform(rng, 0, 9)));
    g.set_utility(1, x, Rational(uniform(rng, 0, 9)));
  } while (g.space().next(x));
  RectRegion region({{0, 1}, {0, 1, 2, 3, 4}});
  const std::uint64_t count = mapping_count(g, region);
  out.require(count == 100'000, "|F| = 100000");
  SolveResult r = min_budget_solve(g, region);
  out.require(verify(g, r.promise, region, r.delta, VerifyMode::kSubset).holds,
              "solution verifies");
  out.detail << "mappings=" << count << " delta=" << r.delta;
}

}  // namespace
}  // namespace gimpl

int main(int argc, char** argv) {
  using namespace gimpl;
  const std::vector<Criterion> criteria{
      {1, "worked example", 1.0, worked_example},
      {2, "solver on the worked example", 1.0, solver_example},
      {3, "flawed-algorithm counterexample", 1.0, counterexample},
      {4, "domination laws on 2000 games", 30.0, domination_laws},
      {5, "solver equals oracle on 500 instances", 60.0, oracle_equivalence},
      {6, "zero cost equals PNE on 1000 pairs", 60.0, pne_equivalence},
      {7, "exactification on 300 equitable instances", 120.0, exactification},
      {8, "two-player X3C reduction end to end", 120.0, two_player_x3c},
      {9, "graphical X3C forward direction", 120.0, graphical_x3c},
      {10, "3-coloring forward direction", 120.0, coloring},
      {11, "|F| = 100000 solves quickly", 10.0, runtime_bound},
  };
  int only = 0;
  for (int k = 1; k + 1 < argc; ++k) {
    if (std::string(argv[k]) == "--criterion") only = std::atoi(argv[k + 1]);
  }
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    out.require(seconds < c.limit_seconds, "time limit");
    all_pass = all_pass && out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.id << " ("
              << c.title << ") " << seconds << "s/" << c.limit_seconds
              << "s: " << out.detail.str() << std::endl;
  }
  return all_pass ? 0 : 1;
}
