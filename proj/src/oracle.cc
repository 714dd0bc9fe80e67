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

#include "gimpl/oracle.h"

#include <functional>
#include <string>

#include "gimpl/domination.h"
#include "gimpl/error.h"
#include "gimpl/implementation.h"
#include "gimpl/view.h"

namespace gimpl {
namespace {

// All functions from `domain` to `codomain`, built recursively.
std::vector<std::map<int, int>> all_functions(const std::vector<int>& domain,
                                              const std::vector<int>& codomain) {
  std::vector<std::map<int, int>> out;
  std::map<int, int> current;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == domain.size()) {
      out.push_back(current);
      return;
    }
    for (int target : codomain) {
      current[domain[k]] = target;
      rec(k + 1);
    }
    current.erase(domain[k]);
  };
  rec(0);
  return out;
}

bool others_in_region(const RectRegion& region, const Profile& x, int i) {
  for (int j = 0; j < static_cast<int>(x.size()); ++j) {
    if (j != i && !region.contains(j, x[j])) return false;
  }
  return true;
}

PaymentPromise promise_for(const Game& game, const RectRegion& region,
                           const DominatorMapping& f) {
  const int n = game.num_players();
  PaymentPromise promise(n);
  Profile x(n, 0);
  do {
    for (int i = 0; i < n; ++i) {
      if (!region.contains(i, x[i])) continue;
      if (!others_in_region(region, x, i)) {
        promise.set(i, x, ExtValue::infinity());
        continue;
      }
      bool any = false;
      Rational best = 0;
      for (const auto& [from, to] : f.targets[i]) {
        if (to != x[i]) continue;
        any = true;
        Profile deviation = x;
        deviation[i] = from;
        Rational gap = game.utility(i, deviation) - game.utility(i, x);
        if (gap > best) best = gap;
      }
      if (any && best > 0) promise.set(i, x, ExtValue(best));
    }
  } while (game.space().next(x));
  return promise;
}

}  // namespace

OracleResult oracle_min_budget(const Game& game, const RectRegion& region) {
  const auto counts = strategy_counts(game);
  region.validate(counts);
  const int n = game.num_players();

  std::vector<std::vector<std::map<int, int>>> choices(n);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<int> undesired;
    for (int s = 0; s < counts[i]; ++s) {
      if (!region.contains(i, s)) undesired.push_back(s);
    }
    std::uint64_t c = 1;
    for (std::size_t k = 0; k < undesired.size(); ++k) {
      c *= region.set(i).size();
      if (c > kOracleMaxMappings) break;
    }
    total *= c;
    if (c > kOracleMaxMappings || total > kOracleMaxMappings) {
      throw Error("oracle: more than " + std::to_string(kOracleMaxMappings) +
                  " dominator mappings");
    }
    choices[i] = all_functions(undesired, region.set(i));
  }

  std::vector<bool> all_opponents_desired(n, true);
  {
    Profile x(n, 0);
    do {
      for (int p = 0; p < n; ++p) {
        if (!others_in_region(region, x, p)) all_opponents_desired[p] = false;
      }
    } while (game.space().next(x));
  }

  OracleResult result;
  DominatorMapping f;
  f.targets.assign(n, {});
  std::function<void(int)> visit = [&](int i) {
    if (i < n) {
      for (const auto& fi : choices[i]) {
        f.targets[i] = fi;
        visit(i + 1);
      }
      return;
    }
    const PaymentPromise promise = promise_for(game, region, f);
    const ModifiedGameView view(game, promise);
    for (int p = 0; p < n; ++p) {
      for (const auto& [from, to] : f.targets[p]) {
        if (dominates(view, p, to, from)) continue;
        // Without an off-region opponent profile strictness is not
        // guaranteed, and the mapping simply yields no implementation.
        if (all_opponents_desired[p]) {
          result.per_mapping_costs.emplace(f, ExtValue::infinity());
          return;
        }
        throw Error("oracle: strategy " + std::to_string(to) +
                    " fails to dominate " + std::to_string(from) +
                    " for player " + std::to_string(p));
      }
    }
    ExtValue bound;
    bool first = true;
    Profile x(n, 0);
    do {
      if (!region.contains(x)) continue;
      ExtValue sum;
      for (int p = 0; p < n; ++p) sum += promise.get(p, x);
      if (first || sum > bound) bound = sum;
      first = false;
    } while (game.space().next(x));
    result.per_mapping_costs.emplace(f, bound);
  };
  visit(0);

  bool first = true;
  for (const auto& [mapping, bound] : result.per_mapping_costs) {
    if (first || bound < result.delta) {
      result.delta = bound;
      result.all_optimal_mappings.clear();
    }
    if (bound == result.delta) result.all_optimal_mappings.push_back(mapping);
    first = false;
  }
  if (result.delta.is_infinite()) result.all_optimal_mappings.clear();
  return result;
}

bool oracle_zero_cost(const Game& game, const RectRegion& region) {
  region.validate(strategy_counts(game));
  const int n = game.num_players();
  PaymentPromise promise(n);
  Profile x(n, 0);
  do {
    for (int i = 0; i < n; ++i) {
      if (region.contains(i, x[i]) && !others_in_region(region, x, i)) {
        promise.set(i, x, ExtValue::infinity());
      }
    }
  } while (game.space().next(x));
  return verify(game, promise, region, ExtValue(0), VerifyMode::kSubset).holds;
}

}  // namespace gimpl
