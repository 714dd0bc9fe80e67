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

#include "gimpl/promise.h"

#include <string>

#include "gimpl/error.h"

namespace gimpl {
namespace {

const ExtValue kZero{};

void check_keys(const PaymentPromise& promise, int n,
                const auto& space_of_player) {
  if (promise.num_players() != n) {
    throw Error("promise covers " + std::to_string(promise.num_players()) +
                " players but the game has " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    const ProfileSpace& space = space_of_player(i);
    for (const auto& [key, value] : promise.entries(i)) {
      if (!space.contains(key)) {
        throw Error("promise profile out of range for player " +
                    std::to_string(i));
      }
    }
  }
}

}  // namespace

PaymentPromise::PaymentPromise(int num_players, PromiseForm form)
    : form_(form), entries_(num_players) {}

const ExtValue& PaymentPromise::get(int player, const Profile& key) const {
  const auto& m = entries_.at(player);
  auto it = m.find(key);
  return it == m.end() ? kZero : it->second;
}

void PaymentPromise::set(int player, Profile key, ExtValue value) {
  if (value.is_negative()) {
    throw Error("negative promise for player " + std::to_string(player));
  }
  auto& m = entries_.at(player);
  if (value.is_zero()) {
    m.erase(key);
  } else {
    m.insert_or_assign(std::move(key), std::move(value));
  }
}

bool PaymentPromise::empty() const {
  for (const auto& m : entries_) {
    if (!m.empty()) return false;
  }
  return true;
}

void validate_promise(const Game& game, const PaymentPromise& promise) {
  if (promise.form() != PromiseForm::kNormal) {
    throw Error("graphical promise given for a normal-form game");
  }
  check_keys(promise, game.num_players(),
             [&](int) -> const ProfileSpace& { return game.space(); });
}

void validate_promise(const GraphicalGame& game,
                      const PaymentPromise& promise) {
  if (promise.form() != PromiseForm::kGraphical) {
    throw Error("normal-form promise given for a graphical game");
  }
  check_keys(promise, game.num_players(),
             [&](int i) -> const ProfileSpace& { return game.local_space(i); });
}

}  // namespace gimpl
