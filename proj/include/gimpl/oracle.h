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

#ifndef GIMPL_ORACLE_H_
#define GIMPL_ORACLE_H_

#include <cstdint>
#include <map>
#include <vector>

#include "gimpl/ext_value.h"
#include "gimpl/game.h"
#include "gimpl/solver.h"

namespace gimpl {

// Definition-level cross-checks for the solver. Nothing here calls into
// the solver's code paths; only DominatorMapping is shared as a data type.

struct OracleResult {
  ExtValue delta;
  std::vector<DominatorMapping> all_optimal_mappings;
  std::map<DominatorMapping, ExtValue> per_mapping_costs;
};

inline constexpr std::uint64_t kOracleMaxMappings = 1'000'000;

// Exhaustive search over every dominator mapping. For each mapping the
// promise is rebuilt from raw utilities, every undesired strategy is
// checked to be dominated by its image, and the payment bound over the
// region is summed directly. Throws if a mapping fails the domination check
// or the landscape exceeds kOracleMaxMappings.
OracleResult oracle_min_budget(const Game& game, const RectRegion& region);

// Builds the infinity-off-region promise for P and runs the implementation
// check at budget 0.
bool oracle_zero_cost(const Game& game, const RectRegion& region);

}  // namespace gimpl

#endif  // GIMPL_ORACLE_H_
