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

#include "gimpl/solver.h"

#include <algorithm>
#include <string>
#include <thread>

#include "gimpl/domination.h"
#include "gimpl/error.h"
#include "gimpl/implementation.h"

namespace gimpl {
namespace {

struct Split {
  std::vector<int> desired;
  std::vector<int> undesired;
};

std::vector<Split> split_region(const std::vector<int>& counts,
                                const RectRegion& region) {
  std::vector<Split> splits(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (int s = 0; s < counts[i]; ++s) {
      (region.contains(static_cast<int>(i), s) ? splits[i].desired
                                               : splits[i].undesired)
          .push_back(s);
    }
  }
  return splits;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b,
                          std::uint64_t cap) {
  if (b != 0 && a > cap / b) {
    throw Error("dominator mapping space exceeds " + std::to_string(cap));
  }
  return a * b;
}

std::uint64_t player_mapping_count(const Split& s, std::uint64_t cap) {
  std::uint64_t c = 1;
  for (std::size_t k = 0; k < s.undesired.size(); ++k) {
    c = checked_mul(c, s.desired.size(), cap);
  }
  return c;
}

// Digit order: first undesired strategy is the most significant.
std::map<int, int> decode_player_mapping(const Split& s, std::uint64_t index) {
  std::map<int, int> f;
  const std::uint64_t base = s.desired.size();
  for (auto it = s.undesired.rbegin(); it != s.undesired.rend(); ++it) {
    f[*it] = s.desired[index % base];
    index /= base;
  }
  return f;
}

// Positions within each O_i; linear order equals lexicographic order of the
// desired profiles.
ProfileSpace region_positions(const RectRegion& region) {
  std::vector<int> radices;
  for (const auto& s : region.sets()) {
    radices.push_back(static_cast<int>(s.size()));
  }
  return ProfileSpace(std::move(radices));
}

// |X_{-i}| - |O_{-i}|.
std::uint64_t off_region_count(const std::vector<int>& counts,
                               const RectRegion& region, int player) {
  std::uint64_t all = 1;
  std::uint64_t desired = 1;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (static_cast<int>(j) == player) continue;
    all *= static_cast<std::uint64_t>(counts[j]);
    desired *= region.set(static_cast<int>(j)).size();
  }
  return all - desired;
}

bool degenerate(const std::vector<int>& counts, const RectRegion& region,
                int player) {
  return static_cast<int>(region.set(player).size()) < counts[player] &&
         off_region_count(counts, region, player) == 0;
}

// With no off-region opponent profile there is nowhere to promise infinity,
// so the mapping only works if the ComputeV table already leaves every
// target strictly ahead somewhere.
bool strict_everywhere(const Game& game, int player,
                       const std::map<int, int>& mapping,
                       const std::vector<Rational>& table,
                       const RectRegion& region) {
  const ProfileSpace positions = region_positions(region);
  const auto& space = game.space();
  const std::size_t stride = space.stride(player);
  std::map<int, bool> strict;
  for (const auto& [x, target] : mapping) strict[x] = false;
  Profile pos(positions.dims(), 0);
  Profile o(positions.dims());
  std::size_t k = 0;
  do {
    for (int j = 0; j < positions.dims(); ++j) o[j] = region.set(j)[pos[j]];
    const std::size_t at_o = space.index(o);
    const Rational lifted = game.utility(player, at_o) + table[k++];
    for (const auto& [x, target] : mapping) {
      if (target != o[player] || strict[x]) continue;
      const std::size_t at_x = at_o - stride * o[player] + stride * x;
      if (lifted > game.utility(player, at_x)) strict[x] = true;
    }
  } while (positions.next(pos));
  return std::all_of(strict.begin(), strict.end(),
                     [](const auto& e) { return e.second; });
}

// Best (delta, linear mapping index) over [lo, hi).
struct Candidate {
  Rational delta;
  std::uint64_t index = UINT64_MAX;
};

Candidate scan_range(const std::vector<std::vector<std::vector<Rational>>>&
                         tables,
                     const std::vector<std::uint64_t>& counts,
                     std::uint64_t lo, std::uint64_t hi) {
  Candidate best;
  if (lo >= hi) return best;
  const int n = static_cast<int>(tables.size());
  const std::size_t cells = tables[0][0].size();
  std::vector<std::uint64_t> digit(n);
  {
    std::uint64_t rest = lo;
    for (int i = n - 1; i >= 0; --i) {
      digit[i] = rest % counts[i];
      rest /= counts[i];
    }
  }
  // acc[k] = sum of the tables of players 0..k-1 at their current digits.
  std::vector<std::vector<Rational>> acc(n, std::vector<Rational>(cells));
  auto rebuild = [&](int from) {
    for (int k = std::max(from, 1); k < n; ++k) {
      const auto& prev = acc[k - 1];
      const auto& add = tables[k - 1][digit[k - 1]];
      for (std::size_t c = 0; c < cells; ++c) acc[k][c] = prev[c] + add[c];
    }
  };
  rebuild(1);
  for (std::uint64_t t = lo; t < hi; ++t) {
    const auto& last = tables[n - 1][digit[n - 1]];
    Rational delta = acc[n - 1][0] + last[0];
    for (std::size_t c = 1; c < cells; ++c) {
      Rational v = acc[n - 1][c] + last[c];
      if (v > delta) delta = std::move(v);
    }
    if (best.index == UINT64_MAX || delta < best.delta) {
      best.delta = std::move(delta);
      best.index = t;
    }
    int level = n - 1;
    while (level >= 0 && ++digit[level] == counts[level]) {
      digit[level] = 0;
      --level;
    }
    if (level < 0) break;
    if (level < n - 1) rebuild(level + 1);
  }
  return best;
}

}  // namespace

std::uint64_t mapping_count(const Game& game, const RectRegion& region,
                            std::uint64_t cap) {
  const auto counts = strategy_counts(game);
  region.validate(counts);
  std::uint64_t total = 1;
  for (const auto& s : split_region(counts, region)) {
    total = checked_mul(total, player_mapping_count(s, cap), cap);
  }
  return total;
}

std::vector<Rational> compute_v(const Game& game, int player,
                                const std::map<int, int>& mapping,
                                const RectRegion& region) {
  const auto counts = strategy_counts(game);
  region.validate(counts);
  if (player < 0 || player >= game.num_players()) {
    throw Error("player index out of range");
  }
  const Split split = split_region(counts, region)[player];
  if (mapping.size() != split.undesired.size()) {
    throw Error("mapping domain must be exactly X_i \\ O_i");
  }
  for (int x : split.undesired) {
    auto it = mapping.find(x);
    if (it == mapping.end() || !region.contains(player, it->second)) {
      throw Error("mapping must send every undesired strategy into O_i");
    }
  }
  const ProfileSpace positions = region_positions(region);
  const auto& space = game.space();
  const std::size_t stride = space.stride(player);
  std::vector<Rational> table(positions.size());
  Profile pos(positions.dims(), 0);
  Profile o(positions.dims());
  std::size_t k = 0;
  do {
    for (int j = 0; j < positions.dims(); ++j) o[j] = region.set(j)[pos[j]];
    const std::size_t at_o = space.index(o);
    const Rational& own = game.utility(player, at_o);
    Rational best = 0;
    for (const auto& [x, target] : mapping) {
      if (target != o[player]) continue;
      const std::size_t at_x = at_o - stride * o[player] + stride * x;
      Rational gap = game.utility(player, at_x) - own;
      if (gap > best) best = std::move(gap);
    }
    table[k++] = std::move(best);
  } while (positions.next(pos));
  return table;
}

SolveResult min_budget_solve(const Game& game, const RectRegion& region,
                             const SolveOptions& options) {
  const auto counts = strategy_counts(game);
  region.validate(counts);
  const int n = game.num_players();
  const auto splits = split_region(counts, region);

  SolveResult result;
  result.promise = PaymentPromise(n);
  result.mapping.targets.assign(n, {});
  if (region == RectRegion::full(counts)) {
    result.delta = ExtValue(0);
    return result;
  }
  std::uint64_t raw_total = 1;
  for (int i = 0; i < n; ++i) {
    raw_total = checked_mul(
        raw_total, player_mapping_count(splits[i], options.max_mappings),
        options.max_mappings);
  }

  // tables[i][k] = ComputeV of the mapping maps[i][k] of player i. Mappings
  // that cannot reach strict domination are dropped, keeping the order.
  std::vector<std::vector<std::map<int, int>>> maps(n);
  std::vector<std::vector<std::vector<Rational>>> tables(n);
  std::vector<std::uint64_t> per_player(n);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    const bool check = degenerate(counts, region, i);
    const std::uint64_t count =
        player_mapping_count(splits[i], options.max_mappings);
    for (std::uint64_t f = 0; f < count; ++f) {
      auto mapping = decode_player_mapping(splits[i], f);
      auto table = compute_v(game, i, mapping, region);
      if (check && !strict_everywhere(game, i, mapping, table, region)) {
        continue;
      }
      maps[i].push_back(std::move(mapping));
      tables[i].push_back(std::move(table));
    }
    if (maps[i].empty()) {
      throw Error("min_budget_solve: player " + std::to_string(i) +
                  " sees only desired opponent profiles and no mapping "
                  "reaches strict domination; the minimum is not attained");
    }
    per_player[i] = maps[i].size();
    total *= per_player[i];
  }

  const unsigned jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(
      options.jobs == 0 ? 1 : options.jobs, 1, total));
  std::vector<Candidate> found(jobs);
  if (jobs == 1) {
    found[0] = scan_range(tables, per_player, 0, total);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::uint64_t lo = total * w / jobs;
      const std::uint64_t hi = total * (w + 1) / jobs;
      workers.emplace_back([&, w, lo, hi] {
        found[w] = scan_range(tables, per_player, lo, hi);
      });
    }
  }
  Candidate best;
  for (auto& c : found) {
    if (c.index == UINT64_MAX) continue;
    if (best.index == UINT64_MAX || c.delta < best.delta ||
        (c.delta == best.delta && c.index < best.index)) {
      best = std::move(c);
    }
  }

  std::vector<std::uint64_t> digit(n);
  std::uint64_t rest = best.index;
  for (int i = n - 1; i >= 0; --i) {
    digit[i] = rest % per_player[i];
    rest /= per_player[i];
  }
  const ProfileSpace positions = region_positions(region);
  for (int i = 0; i < n; ++i) {
    result.mapping.targets[i] = maps[i][digit[i]];
    const auto& table = tables[i][digit[i]];
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (table[k] == 0) continue;
      Profile pos = positions.profile(k);
      Profile o(n);
      for (int j = 0; j < n; ++j) o[j] = region.set(j)[pos[j]];
      result.promise.set(i, std::move(o), ExtValue(table[k]));
    }
  }
  const auto& space = game.space();
  Profile x(n, 0);
  do {
    for (int i = 0; i < n; ++i) {
      if (!region.contains(i, x[i])) continue;
      bool others_desired = true;
      for (int j = 0; j < n && others_desired; ++j) {
        others_desired = j == i || region.contains(j, x[j]);
      }
      if (!others_desired) result.promise.set(i, x, ExtValue::infinity());
    }
  } while (space.next(x));
  result.delta = ExtValue(best.delta);
  return result;
}

EquitableReport is_equitable(const Game& game, const RectRegion& region) {
  const auto counts = strategy_counts(game);
  region.validate(counts);
  EquitableReport report;
  report.equitable = true;
  for (int i = 0; i < game.num_players(); ++i) {
    const std::uint64_t desired = region.set(i).size();
    const std::uint64_t off = off_region_count(counts, region, i);
    report.desired.push_back(desired);
    report.off_region.push_back(off);
    report.margins.push_back(static_cast<std::int64_t>(off) -
                             static_cast<std::int64_t>(desired));
    if (desired > off) report.equitable = false;
  }
  return report;
}

PaymentPromise exactify(const Game& game, const RectRegion& region,
                        const PaymentPromise& promise) {
  const auto counts = strategy_counts(game);
  region.validate(counts);
  if (!is_equitable(game, region).equitable) {
    throw Error("not equitable");
  }
  const int n = game.num_players();
  const ModifiedGameView view(game, promise);
  for (int i = 0; i < n; ++i) {
    for (const auto& [key, value] : promise.entries(i)) {
      if (value.is_infinite() && region.contains(key)) {
        throw Error("promise is infinite on a desired profile");
      }
    }
  }
  if (!verify(view, region, ExtValue::infinity(), VerifyMode::kSubset)
           .holds) {
    throw Error("promise does not implement the region");
  }
  const Rational delta = max_promise_sum(view, region).value();
  const Rational big_m = game.max_utility() + delta + 1;

  PaymentPromise exact(n);
  for (int i = 0; i < n; ++i) {
    const auto& t = view.table(i);
    // Off-region opponent profiles in lexicographic order; the k-th desired
    // strategy of player i is designated the k-th of them.
    std::vector<std::size_t> off;
    Profile ctx(t.context.dims(), 0);
    std::size_t c = 0;
    do {
      bool inside = true;
      for (int k = 0; k < t.context.dims() && inside; ++k) {
        inside = region.contains(t.scope[k], ctx[k]);
      }
      if (!inside) off.push_back(c);
      ++c;
    } while (t.context.next(ctx));

    const auto& desired = region.set(i);
    for (std::size_t r = 0; r < desired.size(); ++r) {
      const int o_i = desired[r];
      const std::size_t designated = off[r];
      Profile x(n);
      x[i] = o_i;
      Profile others(t.context.dims(), 0);
      std::size_t col = 0;
      auto off_it = off.begin();
      do {
        for (int k = 0; k < t.context.dims(); ++k) x[t.scope[k]] = others[k];
        const bool is_off = off_it != off.end() && *off_it == col;
        if (is_off) {
          ++off_it;
          Rational v = big_m - game.utility(i, x);
          if (col == designated) v += 1;
          exact.set(i, x, ExtValue(std::move(v)));
        } else {
          exact.set(i, x, t.promise_at(o_i, col));
        }
        ++col;
      } while (t.context.next(others));
    }
  }
  return exact;
}

SolveResult solve_exact(const Game& game, const RectRegion& region,
                        const SolveOptions& options) {
  region.validate(strategy_counts(game));
  if (!is_equitable(game, region).equitable) throw Error("not equitable");
  SolveResult result = min_budget_solve(game, region, options);
  result.promise = exactify(game, region, result.promise);
  result.exactified = true;
  return result;
}

PneReport is_pne(const ModifiedGameView& view, const RectRegion& region) {
  region.validate(view.strategy_counts());
  PneReport report;
  report.holds = true;
  report.counters.assign(view.num_players(), {});
  for (int i = 0; i < view.num_players() && report.holds; ++i) {
    const auto& t = view.table(i);
    std::vector<std::size_t> inside;
    Profile ctx(t.context.dims(), 0);
    std::size_t c = 0;
    do {
      bool in = true;
      for (int k = 0; k < t.context.dims() && in; ++k) {
        in = region.contains(t.scope[k], ctx[k]);
      }
      if (in) inside.push_back(c);
      ++c;
    } while (t.context.next(ctx));

    for (int x = 0; x < t.rows; ++x) {
      if (region.contains(i, x)) continue;
      std::optional<int> counter;
      for (int p : region.set(i)) {
        const bool beats =
            std::all_of(inside.begin(), inside.end(), [&](std::size_t col) {
              return t.at(p, col) >= t.at(x, col);
            });
        if (beats) {
          counter = p;
          break;
        }
      }
      if (!counter) {
        report.holds = false;
        report.defector = std::make_pair(i, x);
        break;
      }
      report.counters[i][x] = *counter;
    }
  }
  return report;
}

PaymentPromise zero_cost_promise(const Game& game, const RectRegion& region) {
  const auto counts = strategy_counts(game);
  region.validate(counts);
  if (!is_pne(ModifiedGameView(game), region).holds) {
    throw Error("not a PNE");
  }
  const int n = game.num_players();
  const ModifiedGameView plain(game);
  for (int i = 0; i < n; ++i) {
    if (!degenerate(counts, region, i)) continue;
    for (int x = 0; x < counts[i]; ++x) {
      if (region.contains(i, x)) continue;
      const auto& set = region.set(i);
      if (std::none_of(set.begin(), set.end(), [&](int p) {
            return dominates(plain, i, p, x).has_value();
          })) {
        throw Error("zero_cost_promise: player " + std::to_string(i) +
                    " sees only desired opponent profiles and strategy " +
                    std::to_string(x) + " is not strictly dominated; zero "
                    "cost is not attained");
      }
    }
  }
  PaymentPromise promise(n);
  Profile x(n, 0);
  do {
    for (int i = 0; i < n; ++i) {
      if (!region.contains(i, x[i])) continue;
      for (int j = 0; j < n; ++j) {
        if (j != i && !region.contains(j, x[j])) {
          promise.set(i, x, ExtValue::infinity());
          break;
        }
      }
    }
  } while (game.space().next(x));
  return promise;
}

PaymentPromise zero_cost_promise(const GraphicalGame& game,
                                 const RectRegion& region) {
  const auto counts = strategy_counts(game);
  region.validate(counts);
  if (!is_pne(ModifiedGameView(game), region).holds) {
    throw Error("not a PNE");
  }
  const int n = game.num_players();
  PaymentPromise promise(n, PromiseForm::kGraphical);
  for (int i = 0; i < n; ++i) {
    const auto& nb = game.neighbors(i);
    const bool has_undesired =
        static_cast<int>(region.set(i).size()) < counts[i];
    const bool neighbor_restricted =
        std::any_of(nb.begin(), nb.end(), [&](int j) {
          return static_cast<int>(region.set(j).size()) < counts[j];
        });
    if (has_undesired && !neighbor_restricted) {
      const ModifiedGameView plain(game);
      const auto& set = region.set(i);
      for (int x = 0; x < counts[i]; ++x) {
        if (region.contains(i, x)) continue;
        if (std::none_of(set.begin(), set.end(), [&](int p) {
              return dominates(plain, i, p, x).has_value();
            })) {
          throw Error("zero_cost_promise: player " + std::to_string(i) +
                      " sees only desired neighbor profiles and strategy " +
                      std::to_string(x) + " is not strictly dominated; zero "
                      "cost is not attained");
        }
      }
    }
    const auto& local = game.local_space(i);
    Profile key(local.dims(), 0);
    do {
      if (!region.contains(i, key[0])) continue;
      for (std::size_t k = 0; k < nb.size(); ++k) {
        if (!region.contains(nb[k], key[k + 1])) {
          promise.set(i, key, ExtValue::infinity());
          break;
        }
      }
    } while (local.next(key));
  }
  return promise;
}

}  // namespace gimpl
