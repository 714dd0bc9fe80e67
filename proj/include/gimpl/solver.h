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

#ifndef GIMPL_SOLVER_H_
#define GIMPL_SOLVER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gimpl/ext_value.h"
#include "gimpl/game.h"
#include "gimpl/promise.h"
#include "gimpl/view.h"

namespace gimpl {

// F = (F_1, ..., F_n) with F_i : X_i \ O_i -> O_i. Ordering is
// lexicographic: players ascending, then undesired strategies ascending,
// comparing the assigned desired strategy index.
struct DominatorMapping {
  std::vector<std::map<int, int>> targets;

  friend bool operator==(const DominatorMapping&,
                         const DominatorMapping&) = default;
  friend auto operator<=>(const DominatorMapping&,
                          const DominatorMapping&) = default;
};

struct SolveResult {
  ExtValue delta;
  PaymentPromise promise;
  DominatorMapping mapping;
  bool exactified = false;
};

struct SolveOptions {
  unsigned jobs = 1;
  // Refuse searches over more mappings than this.
  std::uint64_t max_mappings = 200'000'000;
};

// |F| for the region; throws when it exceeds `cap`.
std::uint64_t mapping_count(const Game& game, const RectRegion& region,
                            std::uint64_t cap = UINT64_MAX);

// Promise to player i induced by F_i, on the desired profiles only. Entry k
// belongs to the k-th profile of `region` in lexicographic order:
// max{0, max_{x in F_i^{-1}(o_i)} U_i(x, o_{-i}) - U_i(o)}, or 0 when o_i
// has an empty preimage.
std::vector<Rational> compute_v(const Game& game, int player,
                                const std::map<int, int>& mapping,
                                const RectRegion& region);

// Smallest delta = max_{o in O} sum_i V_i(o) over promises with
// X*_{G[V]} inside O. The returned promise is the ComputeV promise of the
// first optimal mapping plus infinity on every (o_i, x_{-i}) with x_{-i}
// outside O_{-i}.
SolveResult min_budget_solve(const Game& game, const RectRegion& region,
                             const SolveOptions& options = {});

struct EquitableReport {
  bool equitable = false;
  std::vector<std::uint64_t> desired;     // |O_i|
  std::vector<std::uint64_t> off_region;  // |X_{-i} \ O_{-i}|
  // off_region - desired, per player; negative means the player fails.
  std::vector<std::int64_t> margins;
};

EquitableReport is_equitable(const Game& game, const RectRegion& region);

// Rewrites a promise that implements the region into one that implements
// it exactly, keeping the promise on the region (and thus
// max_{o in O} sum_i V_i(o)) unchanged. Big-M constant is
// U_max + delta + 1.
PaymentPromise exactify(const Game& game, const RectRegion& region,
                        const PaymentPromise& promise);

// min_budget_solve followed by exactify.
SolveResult solve_exact(const Game& game, const RectRegion& region,
                        const SolveOptions& options = {});

struct PneReport {
  bool holds = false;
  // A (player, strategy) outside P that no strategy in P_i counters.
  std::optional<std::pair<int, int>> defector;
  // Per player: outside strategy -> smallest countering strategy in P_i.
  std::vector<std::map<int, int>> counters;
};

// Promise-Nash equilibrium test on the (possibly modified) game: every
// x_i outside P_i is weakly beaten by one p_i in P_i against all of P_{-i}
// (against P restricted to the neighbors for graphical views).
PneReport is_pne(const ModifiedGameView& view, const RectRegion& region);

// Zero-cost promise for a PNE region: infinity on (p_i, x_{-i}) for
// x_{-i} outside P_{-i}, zero elsewhere.
PaymentPromise zero_cost_promise(const Game& game, const RectRegion& region);
PaymentPromise zero_cost_promise(const GraphicalGame& game,
                                 const RectRegion& region);

}  // namespace gimpl

#endif  // GIMPL_SOLVER_H_
