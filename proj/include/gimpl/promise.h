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

#ifndef GIMPL_PROMISE_H_
#define GIMPL_PROMISE_H_

#include <map>
#include <vector>

#include "gimpl/ext_value.h"
#include "gimpl/game.h"

namespace gimpl {

enum class PromiseForm { kNormal, kGraphical };

// Sparse per-player payment promise. Keys are full profiles (normal form)
// or (own, neighbors...) local profiles (graphical form); absent keys are 0.
// Values are nonnegative or infinite.
class PaymentPromise {
 public:
  PaymentPromise() = default;
  explicit PaymentPromise(int num_players,
                          PromiseForm form = PromiseForm::kNormal);

  int num_players() const { return static_cast<int>(entries_.size()); }
  PromiseForm form() const { return form_; }

  const ExtValue& get(int player, const Profile& key) const;
  // Setting 0 erases the entry. Negative values are rejected.
  void set(int player, Profile key, ExtValue value);

  const std::map<Profile, ExtValue>& entries(int player) const {
    return entries_.at(player);
  }
  bool empty() const;

  friend bool operator==(const PaymentPromise&,
                         const PaymentPromise&) = default;

 private:
  PromiseForm form_ = PromiseForm::kNormal;
  std::vector<std::map<Profile, ExtValue>> entries_;
};

// Throws unless every key is a valid profile of `game` for the promise form.
void validate_promise(const Game& game, const PaymentPromise& promise);
void validate_promise(const GraphicalGame& game,
                      const PaymentPromise& promise);

}  // namespace gimpl

#endif  // GIMPL_PROMISE_H_
