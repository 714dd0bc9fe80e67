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

#ifndef GIMPL_IMPLEMENTATION_H_
#define GIMPL_IMPLEMENTATION_H_

#include <optional>

#include "gimpl/ext_value.h"
#include "gimpl/game.h"
#include "gimpl/promise.h"
#include "gimpl/view.h"

namespace gimpl {

// max over profiles x in `region` of sum_i V_i(x).
ExtValue max_promise_sum(const ModifiedGameView& view,
                         const RectRegion& region);

// cost(V): max_promise_sum over the undominated region of G[V].
ExtValue cost(const ModifiedGameView& view);
ExtValue cost(const Game& game, const PaymentPromise& promise);
ExtValue cost(const GraphicalGame& game, const PaymentPromise& promise);

enum class VerifyMode { kSubset, kExact };

struct Violation {
  int player = 0;
  int strategy = 0;
  // True: undominated but not desired. False: desired but dominated.
  bool undesired_survivor = true;
};

struct VerifyReport {
  VerifyMode mode = VerifyMode::kSubset;
  bool holds = false;
  RectRegion undominated_region;
  ExtValue cost;
  ExtValue budget;
  // First offending (player, strategy) in index order; empty when the
  // region condition holds (the budget may still fail).
  std::optional<Violation> violation;
};

VerifyReport verify(const ModifiedGameView& view, const RectRegion& region,
                    const ExtValue& budget, VerifyMode mode);
VerifyReport verify(const Game& game, const PaymentPromise& promise,
                    const RectRegion& region, const ExtValue& budget,
                    VerifyMode mode);
VerifyReport verify(const GraphicalGame& game, const PaymentPromise& promise,
                    const RectRegion& region, const ExtValue& budget,
                    VerifyMode mode);

}  // namespace gimpl

#endif  // GIMPL_IMPLEMENTATION_H_
