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

#ifndef GIMPL_INSTANCE_IO_H_
#define GIMPL_INSTANCE_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "gimpl/ext_value.h"
#include "gimpl/game.h"
#include "gimpl/promise.h"

namespace gimpl {

// One "gipf-1" document: a game plus whatever rides along with it.
struct Instance {
  std::variant<Game, GraphicalGame> game;
  std::optional<RectRegion> region;
  std::optional<ExtValue> budget;
  std::optional<PaymentPromise> promise;

  bool graphical() const {
    return std::holds_alternative<GraphicalGame>(game);
  }
  std::vector<int> strategy_counts() const;
  int num_players() const;
};

Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::string& path);

// Deterministic output; zero entries are omitted.
std::string serialize_instance(const Instance& instance);

}  // namespace gimpl

#endif  // GIMPL_INSTANCE_IO_H_
