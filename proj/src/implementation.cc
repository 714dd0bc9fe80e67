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

#include "gimpl/implementation.h"

#include "gimpl/domination.h"
#include "gimpl/error.h"

namespace gimpl {

ExtValue max_promise_sum(const ModifiedGameView& view,
                         const RectRegion& region) {
  region.validate(view.strategy_counts());
  const int n = view.num_players();
  std::vector<int> radices;
  for (const auto& s : region.sets()) {
    radices.push_back(static_cast<int>(s.size()));
  }
  const ProfileSpace positions(std::move(radices));
  Profile pos(n, 0);
  Profile x(n);
  ExtValue best;
  bool first = true;
  do {
    for (int i = 0; i < n; ++i) x[i] = region.set(i)[pos[i]];
    ExtValue sum;
    for (int i = 0; i < n; ++i) {
      const auto& t = view.table(i);
      sum += t.promise_at(x[i], t.column(x));
    }
    if (first || sum > best) best = std::move(sum);
    first = false;
    if (best.is_infinite()) break;
  } while (positions.next(pos));
  return best;
}

ExtValue cost(const ModifiedGameView& view) {
  return max_promise_sum(view, undominated_region(view));
}

ExtValue cost(const Game& game, const PaymentPromise& promise) {
  return cost(ModifiedGameView(game, promise));
}

ExtValue cost(const GraphicalGame& game, const PaymentPromise& promise) {
  return cost(ModifiedGameView(game, promise));
}

VerifyReport verify(const ModifiedGameView& view, const RectRegion& region,
                    const ExtValue& budget, VerifyMode mode) {
  region.validate(view.strategy_counts());
  VerifyReport report;
  report.mode = mode;
  report.budget = budget;
  report.undominated_region = undominated_region(view);
  report.cost = max_promise_sum(view, report.undominated_region);
  const auto& star = report.undominated_region;
  for (int i = 0; i < view.num_players() && !report.violation; ++i) {
    for (int s = 0; s < view.num_strategies(i); ++s) {
      const bool in_star = star.contains(i, s);
      const bool desired = region.contains(i, s);
      if (in_star && !desired) {
        report.violation = Violation{i, s, true};
        break;
      }
      if (mode == VerifyMode::kExact && desired && !in_star) {
        report.violation = Violation{i, s, false};
        break;
      }
    }
  }
  report.holds = !report.violation && report.cost <= budget;
  return report;
}

VerifyReport verify(const Game& game, const PaymentPromise& promise,
                    const RectRegion& region, const ExtValue& budget,
                    VerifyMode mode) {
  return verify(ModifiedGameView(game, promise), region, budget, mode);
}

VerifyReport verify(const GraphicalGame& game, const PaymentPromise& promise,
                    const RectRegion& region, const ExtValue& budget,
                    VerifyMode mode) {
  return verify(ModifiedGameView(game, promise), region, budget, mode);
}

}  // namespace gimpl
