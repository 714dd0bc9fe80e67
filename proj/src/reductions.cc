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

#include "gimpl/reductions.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <string_view>

#include "gimpl/domination.h"
#include "gimpl/error.h"
#include "gimpl/implementation.h"
#include "gimpl/view.h"

namespace gimpl {
namespace {

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error("bad index in strategy name");
  }
  return value;
}

// Shuffles `multiplicity` copies of each element into triples; empty when a
// triple repeats an element.
std::optional<std::vector<std::array<int, 3>>> configuration_sample(
    const std::vector<int>& elements, int multiplicity, std::mt19937_64& rng) {
  std::vector<int> pool;
  for (int e : elements) pool.insert(pool.end(), multiplicity, e);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::array<int, 3>> sets;
  for (std::size_t k = 0; k < pool.size(); k += 3) {
    std::array<int, 3> t{pool[k], pool[k + 1], pool[k + 2]};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) return std::nullopt;
    sets.push_back(t);
  }
  return sets;
}

std::vector<std::array<int, 3>> sample_regular(const std::vector<int>& elements,
                                               int multiplicity,
                                               std::mt19937_64& rng) {
  for (int attempt = 0; attempt < kMaxNoAttempts; ++attempt) {
    if (auto sets = configuration_sample(elements, multiplicity, rng)) {
      return *sets;
    }
  }
  throw Error("x3c sampler exhausted");
}

X3CInstance sample_any(int n, std::mt19937_64& rng) {
  std::vector<int> elements(3 * n);
  std::iota(elements.begin(), elements.end(), 0);
  return X3CInstance{n, sample_regular(elements, 3, rng)};
}

bool brute_search(const X3CInstance& inst, int start, std::vector<bool>& used,
                  int covered, ExactCover& chosen) {
  if (covered == inst.num_elements()) return true;
  int need = inst.n - static_cast<int>(chosen.size());
  for (int j = start; j < static_cast<int>(inst.sets.size()); ++j) {
    if (static_cast<int>(inst.sets.size()) - j < need) break;
    const auto& s = inst.sets[j];
    if (used[s[0]] || used[s[1]] || used[s[2]]) continue;
    for (int e : s) used[e] = true;
    chosen.push_back(j);
    if (brute_search(inst, j + 1, used, covered + 3, chosen)) return true;
    chosen.pop_back();
    for (int e : s) used[e] = false;
  }
  return false;
}

// Element i inside set j for the two-player construction.
struct TwoPlayerLayout {
  int num_elements = 0;
  std::map<std::pair<int, int>, int> c_index;
  std::vector<std::string> names;

  explicit TwoPlayerLayout(const X3CInstance& inst)
      : num_elements(inst.num_elements()) {
    for (int i = 0; i < num_elements; ++i) {
      names.push_back("a" + std::to_string(i));
    }
    for (int i = 0; i < num_elements; ++i) {
      for (int j : inst.sets_containing(i)) {
        c_index[{i, j}] = static_cast<int>(names.size());
        names.push_back("c" + std::to_string(i) + "_" + std::to_string(j));
      }
    }
  }
  int c(int i, int j) const { return c_index.at({i, j}); }
};

void require_cover(const X3CInstance& inst, const ExactCover& cover) {
  if (!is_exact_cover(inst, cover)) throw Error("invalid exact cover");
}

}  // namespace

void X3CInstance::validate() const {
  if (n < 1) throw Error("x3c instance needs n >= 1");
  if (static_cast<int>(sets.size()) != 3 * n) {
    throw Error("x3c instance needs exactly 3n sets");
  }
  std::vector<int> count(3 * n, 0);
  for (const auto& s : sets) {
    for (int e : s) {
      if (e < 0 || e >= 3 * n) throw Error("x3c element out of range");
      ++count[e];
    }
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
      throw Error("x3c set repeats an element");
    }
  }
  for (int c : count) {
    if (c != 3) throw Error("x3c element must occur in exactly three sets");
  }
}

std::vector<int> X3CInstance::sets_containing(int element) const {
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(sets.size()); ++j) {
    if (std::find(sets[j].begin(), sets[j].end(), element) != sets[j].end()) {
      out.push_back(j);
    }
  }
  return out;
}

bool is_exact_cover(const X3CInstance& instance, const ExactCover& cover) {
  if (static_cast<int>(cover.size()) != instance.n) return false;
  std::vector<bool> seen_set(instance.sets.size(), false);
  std::vector<bool> covered(instance.num_elements(), false);
  for (int j : cover) {
    if (j < 0 || j >= static_cast<int>(instance.sets.size()) || seen_set[j]) {
      return false;
    }
    seen_set[j] = true;
    for (int e : instance.sets[j]) {
      if (covered[e]) return false;
      covered[e] = true;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

X3CInstance gen_x3c(int n, std::uint64_t seed, Force force) {
  if (n < 1) throw Error("gen_x3c needs n >= 1");
  std::mt19937_64 rng(seed);
  X3CInstance inst;
  switch (force) {
    case Force::kAny:
      inst = sample_any(n, rng);
      break;
    case Force::kYes: {
      std::vector<int> elements(3 * n);
      std::iota(elements.begin(), elements.end(), 0);
      std::shuffle(elements.begin(), elements.end(), rng);
      std::vector<std::array<int, 3>> sets;
      for (int k = 0; k < n; ++k) {
        std::array<int, 3> t{elements[3 * k], elements[3 * k + 1],
                             elements[3 * k + 2]};
        std::sort(t.begin(), t.end());
        sets.push_back(t);
      }
      auto padding = sample_regular(elements, 2, rng);
      sets.insert(sets.end(), padding.begin(), padding.end());
      std::shuffle(sets.begin(), sets.end(), rng);
      inst = X3CInstance{n, std::move(sets)};
      break;
    }
    case Force::kNo: {
      bool found = false;
      for (int attempt = 0; attempt < kMaxNoAttempts && !found; ++attempt) {
        inst = sample_any(n, rng);
        found = !brute_x3c(inst).has_value();
      }
      if (!found) throw Error("x3c sampler exhausted: no no-instance found");
      break;
    }
  }
  inst.validate();
  return inst;
}

std::optional<ExactCover> brute_x3c(const X3CInstance& instance) {
  instance.validate();
  std::vector<bool> used(instance.num_elements(), false);
  ExactCover chosen;
  if (brute_search(instance, 0, used, 0, chosen)) return chosen;
  return std::nullopt;
}

TwoPlayerReduction x3c_to_two_player(const X3CInstance& instance) {
  instance.validate();
  TwoPlayerLayout layout(instance);
  const int m = layout.num_elements;
  Game game({PlayerInfo{"1", layout.names}, PlayerInfo{"2", layout.names}});
  auto set1 = [&](int x, int y, int v) {
    game.set_utility(0, std::vector<int>{x, y}, Rational(v));
  };
  auto set2 = [&](int x, int y, int v) {
    game.set_utility(1, std::vector<int>{x, y}, Rational(v));
  };
  for (int i = 0; i < m; ++i) {
    for (int j : instance.sets_containing(i)) {
      set1(i, layout.c(i, j), 2);
      set1(layout.c(i, j), layout.c(i, j), 2);
      for (int other : instance.sets[j]) {
        if (other == i) continue;
        set1(i, layout.c(other, j), 1);
        set1(layout.c(i, j), layout.c(other, j), 1);
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    int prev = (i + m - 1) % m;
    for (int p : instance.sets_containing(prev)) {
      set2(layout.c(prev, p), i, 1);
      for (int j : instance.sets_containing(i)) {
        set2(layout.c(prev, p), layout.c(i, j), 1);
      }
    }
  }
  std::vector<int> desired(layout.names.size() - m);
  std::iota(desired.begin(), desired.end(), m);
  return {std::move(game), RectRegion({desired, desired}), ExtValue(0)};
}

PaymentPromise x3c_forward_promise_2p(const X3CInstance& instance,
                                      const ExactCover& cover) {
  instance.validate();
  require_cover(instance, cover);
  TwoPlayerLayout layout(instance);
  const int m = layout.num_elements;
  std::vector<bool> in_cover(instance.sets.size(), false);
  for (int j : cover) in_cover[j] = true;
  PaymentPromise promise(2);
  for (int i = 0; i < m; ++i) {
    for (int j : instance.sets_containing(i)) {
      if (!in_cover[j]) continue;
      for (int p : instance.sets_containing(i)) {
        if (p == j) continue;
        for (int other : instance.sets[p]) {
          promise.set(0, {layout.c(i, j), layout.c(other, p)},
                      ExtValue::infinity());
        }
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    int prev = (i + m - 1) % m;
    for (int j : instance.sets_containing(i)) {
      if (!in_cover[j]) continue;
      for (int p : instance.sets_containing(prev)) {
        if (in_cover[p]) continue;
        promise.set(1, {layout.c(prev, p), layout.c(i, j)},
                    ExtValue::infinity());
      }
    }
  }
  return promise;
}

ExactCover decode_cover_2p(const Game& game, const PaymentPromise& promise) {
  if (game.num_players() != 2) throw Error("expected a two-player game");
  validate_promise(game, promise);
  // Recover the instance from the strategy names c<i>_<j>.
  const auto& names = game.player(1).strategies;
  std::map<int, std::vector<int>> members;
  std::vector<int> c_set(names.size(), -1);
  std::vector<int> desired;
  int elements = 0;
  for (std::size_t s = 0; s < names.size(); ++s) {
    std::string_view name = names[s];
    if (name.starts_with('a')) {
      ++elements;
      continue;
    }
    auto sep = name.find('_');
    if (!name.starts_with('c') || sep == std::string_view::npos) {
      throw Error("strategy name is not from the x3c construction");
    }
    int i = parse_int(name.substr(1, sep - 1));
    int j = parse_int(name.substr(sep + 1));
    members[j].push_back(i);
    c_set[s] = j;
    desired.push_back(static_cast<int>(s));
  }
  if (elements == 0 || elements % 3 != 0) {
    throw Error("strategy names do not describe an x3c construction");
  }
  X3CInstance inst;
  inst.n = elements / 3;
  for (const auto& [j, elems] : members) {
    if (j != static_cast<int>(inst.sets.size()) || elems.size() != 3) {
      throw Error("strategy names do not describe an x3c construction");
    }
    std::array<int, 3> t{elems[0], elems[1], elems[2]};
    std::sort(t.begin(), t.end());
    inst.sets.push_back(t);
  }
  inst.validate();

  RectRegion region({desired, desired});
  auto report = verify(game, promise, region, ExtValue(0), VerifyMode::kSubset);
  if (!report.holds) {
    throw Error("promise does not implement the desired region at budget 0");
  }
  ExactCover cover;
  for (int s : report.undominated_region.set(1)) {
    if (c_set[s] >= 0) cover.push_back(c_set[s]);
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  if (!is_exact_cover(inst, cover)) {
    throw Error("decoded sets do not form an exact cover");
  }
  return cover;
}

GraphicalReduction x3c_to_graphical(const X3CInstance& instance) {
  instance.validate();
  const int m = instance.num_elements();
  std::vector<PlayerInfo> players;
  for (int i = 0; i < m; ++i) {
    players.push_back({"a" + std::to_string(i), {"T", "F"}});
  }
  for (int j = 0; j < m; ++j) {
    players.push_back({"C" + std::to_string(j), {"T", "F"}});
  }
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < m; ++j) {
    for (int e : instance.sets[j]) edges.emplace_back(e, m + j);
  }
  GraphicalGame game(std::move(players), std::move(edges));
  // F pays 1 unless exactly one neighboring set plays T.
  for (int i = 0; i < m; ++i) {
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<int> local{1};
      int trues = 0;
      for (int k = 0; k < 3; ++k) {
        bool t = (mask >> k) & 1;
        trues += t;
        local.push_back(t ? 0 : 1);
      }
      if (trues != 1) game.set_utility(i, local, Rational(1));
    }
  }
  std::vector<std::vector<int>> sets(2 * m, std::vector<int>{0, 1});
  for (int i = 0; i < m; ++i) sets[i] = {0};
  return {std::move(game), RectRegion(std::move(sets)),
          ExtValue(Rational(1, 2))};
}

PaymentPromise x3c_forward_promise_graphical(const X3CInstance& instance,
                                             const ExactCover& cover,
                                             const ExtValue& budget) {
  instance.validate();
  require_cover(instance, cover);
  if (budget.is_infinite() || budget.value() <= 0) {
    throw Error("graphical forward promise needs a finite positive budget");
  }
  const int m = instance.num_elements();
  std::vector<bool> in_cover(instance.sets.size(), false);
  for (int j : cover) in_cover[j] = true;
  PaymentPromise promise(2 * m, PromiseForm::kGraphical);
  for (int i = 0; i < m; ++i) {
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<int> local{0};
      int trues = 0;
      for (int k = 0; k < 3; ++k) {
        bool t = (mask >> k) & 1;
        trues += t;
        local.push_back(t ? 0 : 1);
      }
      if (trues != 1) promise.set(i, local, ExtValue::infinity());
    }
  }
  ExtValue share(budget.value() / (3 * instance.n));
  for (int j = 0; j < m; ++j) {
    int own = in_cover[j] ? 0 : 1;
    for (int mask = 0; mask < 8; ++mask) {
      promise.set(m + j,
                  {own, (mask >> 2) & 1, (mask >> 1) & 1, mask & 1}, share);
    }
  }
  return promise;
}

ExactCover decode_cover_graphical(const GraphicalGame& game,
                                  const PaymentPromise& promise) {
  validate_promise(game, promise);
  const int players = game.num_players();
  if (players % 2 != 0) {
    throw Error("player list does not describe a graphical x3c construction");
  }
  const int m = players / 2;
  X3CInstance inst;
  inst.n = m / 3;
  for (int j = 0; j < m; ++j) {
    const auto& ngb = game.neighbors(m + j);
    if (ngb.size() != 3 || ngb.back() >= m) {
      throw Error("set player must have three element neighbors");
    }
    inst.sets.push_back({ngb[0], ngb[1], ngb[2]});
  }
  inst.validate();
  std::vector<std::vector<int>> sets(2 * m, std::vector<int>{0, 1});
  for (int i = 0; i < m; ++i) sets[i] = {0};
  RectRegion region(std::move(sets));
  ModifiedGameView view(game, promise);
  auto report = verify(view, region, ExtValue::infinity(), VerifyMode::kSubset);
  if (!report.holds) {
    throw Error("promise does not implement the desired region");
  }
  ExactCover cover;
  for (int j = 0; j < m; ++j) {
    const auto& survivors = report.undominated_region.set(m + j);
    if (survivors.size() != 1) {
      throw Error("set player C" + std::to_string(j) +
                  " keeps both strategies undominated");
    }
    if (survivors[0] == 0) cover.push_back(j);
  }
  if (!is_exact_cover(inst, cover)) {
    throw Error("decoded sets do not form an exact cover");
  }
  return cover;
}

void Graph::validate() const {
  if (vertices < 0) throw Error("negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw Error("edge endpoint out of range");
    }
    if (u == v) throw Error("self-loop in graph");
  }
}

std::vector<std::vector<int>> Graph::adjacency() const {
  validate();
  std::vector<std::vector<int>> adj(vertices);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

bool is_proper_coloring(const Graph& graph, const Coloring& coloring) {
  if (static_cast<int>(coloring.size()) != graph.vertices) return false;
  for (int c : coloring) {
    if (c < 1 || c > 3) return false;
  }
  for (auto [u, v] : graph.edges) {
    if (coloring[u] == coloring[v]) return false;
  }
  return true;
}

namespace {

// Strategy indices: vertices 0..n-1, color choices n + 3v + (c-1), dummies
// 4n + k paired with the k-th color choice.
struct ColoringLayout {
  int n;
  int vertex(int v) const { return v; }
  int choice(int v, int c) const { return n + 3 * v + (c - 1); }
  int dummy(int k) const { return 4 * n + k; }
  int size() const { return 7 * n; }
};

void set_symmetric(Game& game, int x, int y, const Rational& value) {
  game.set_utility(0, std::vector<int>{x, y}, value);
  game.set_utility(1, std::vector<int>{y, x}, value);
}

bool color_search(const std::vector<std::vector<int>>& adj, int v,
                  Coloring& coloring) {
  if (v == static_cast<int>(adj.size())) return true;
  for (int c = 1; c <= 3; ++c) {
    bool ok = true;
    for (int u : adj[v]) {
      if (u < v && coloring[u] == c) ok = false;
    }
    if (!ok) continue;
    coloring[v] = c;
    if (color_search(adj, v + 1, coloring)) return true;
  }
  coloring[v] = 0;
  return false;
}

}  // namespace

TwoPlayerReduction coloring_to_exact(const Graph& graph) {
  auto adj = graph.adjacency();
  if (graph.vertices < 1) throw Error("coloring reduction needs a vertex");
  ColoringLayout layout{graph.vertices};
  const int n = graph.vertices;
  std::vector<std::string> names(layout.size());
  for (int v = 0; v < n; ++v) {
    names[layout.vertex(v)] = "v" + std::to_string(v);
    for (int c = 1; c <= 3; ++c) {
      names[layout.choice(v, c)] =
          "v" + std::to_string(v) + "c" + std::to_string(c);
    }
  }
  for (int k = 0; k < 3 * n; ++k) names[layout.dummy(k)] = "d" + std::to_string(k);
  Game game({PlayerInfo{"1", names}, PlayerInfo{"2", names}});
  for (int v = 0; v < n; ++v) {
    for (int c1 = 1; c1 <= 3; ++c1) {
      for (int c2 = 1; c2 <= 3; ++c2) {
        set_symmetric(game, layout.choice(v, c1), layout.choice(v, c2),
                      Rational(c1 == c2 ? 3 : 2));
      }
      set_symmetric(game, layout.vertex(v), layout.choice(v, c1), Rational(3));
    }
    for (int u : adj[v]) {
      for (int c1 = 1; c1 <= 3; ++c1) {
        for (int c2 = 1; c2 <= 3; ++c2) {
          set_symmetric(game, layout.choice(u, c1), layout.choice(v, c2),
                        Rational(c1 == c2 ? 1 : 2));
        }
        set_symmetric(game, layout.vertex(v), layout.choice(u, c1),
                      Rational(2));
      }
    }
  }
  for (int k = 0; k < 3 * n; ++k) {
    set_symmetric(game, layout.choice(0, 1) + k, layout.dummy(k), Rational(1));
  }
  std::vector<int> desired(3 * n);
  std::iota(desired.begin(), desired.end(), n);
  return {std::move(game), RectRegion({desired, desired}), ExtValue(1)};
}

PaymentPromise coloring_forward_promise(const Graph& graph,
                                        const Coloring& coloring) {
  auto adj = graph.adjacency();
  if (!is_proper_coloring(graph, coloring)) throw Error("improper coloring");
  ColoringLayout layout{graph.vertices};
  PaymentPromise promise(2);
  auto put = [&](int x, int y) {
    promise.set(0, {x, y}, ExtValue(1));
    promise.set(1, {y, x}, ExtValue(1));
  };
  for (int v = 0; v < graph.vertices; ++v) {
    int c = coloring[v];
    for (int d = 1; d <= 3; ++d) {
      if (d != c) put(layout.choice(v, c), layout.choice(v, d));
    }
    for (int u : adj[v]) put(layout.choice(v, c), layout.choice(u, c));
  }
  return promise;
}

ColoringInstance decode_coloring(const Game& game,
                                 const PaymentPromise& promise) {
  if (game.num_players() != 2) throw Error("expected a two-player game");
  validate_promise(game, promise);
  int size = game.num_strategies(0);
  if (size % 7 != 0 || size == 0 || game.num_strategies(1) != size) {
    throw Error("strategy counts do not describe a coloring construction");
  }
  ColoringLayout layout{size / 7};
  const int n = layout.n;
  for (int v = 0; v < n; ++v) {
    if (game.player(0).strategies[v] != "v" + std::to_string(v)) {
      throw Error("strategy names do not describe a coloring construction");
    }
  }
  Graph graph{n, {}};
  for (int v = 0; v < n; ++v) {
    for (int u = v + 1; u < n; ++u) {
      if (game.utility(0, std::vector<int>{layout.vertex(v),
                                           layout.choice(u, 1)}) == 2) {
        graph.edges.emplace_back(v, u);
      }
    }
  }
  std::vector<int> desired(3 * n);
  std::iota(desired.begin(), desired.end(), n);
  RectRegion region({desired, desired});
  ModifiedGameView view(game, promise);
  auto report = verify(view, region, ExtValue(1), VerifyMode::kExact);
  if (!report.holds) {
    throw Error("promise does not exactly implement the color choices "
                "within budget 1");
  }
  Coloring coloring(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int c = 1; c <= 3 && coloring[v] == 0; ++c) {
      int x = layout.choice(v, c);
      if (dominates(view, 0, x, layout.vertex(v)) &&
          dominates(view, 1, x, layout.vertex(v))) {
        coloring[v] = c;
      }
    }
    if (coloring[v] == 0) {
      throw Error("players disagree on the color of vertex " +
                  std::to_string(v));
    }
  }
  if (!is_proper_coloring(graph, coloring)) {
    throw Error("decoded coloring is improper");
  }
  return {std::move(graph), std::move(coloring)};
}

std::optional<Coloring> brute_coloring(const Graph& graph) {
  auto adj = graph.adjacency();
  Coloring coloring(graph.vertices, 0);
  if (color_search(adj, 0, coloring)) return coloring;
  return std::nullopt;
}

}  // namespace gimpl
