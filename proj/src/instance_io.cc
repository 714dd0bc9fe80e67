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

#include "gimpl/instance_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "gimpl/error.h"
#include "json.hpp"

namespace gimpl {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ExtValue read_value(const json& v, const std::string& what) {
  if (v.is_number_integer()) return ExtValue(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return ExtValue::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw Error(what + ": " + e.what());
    }
  }
  throw Error(what + ": expected an integer or a \"p/q\" string");
}

ordered_json write_value(const ExtValue& v) {
  if (v.is_finite() && denominator(v.value()) == 1) {
    const auto& num = numerator(v.value());
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      return num.convert_to<std::int64_t>();
    }
  }
  return v.to_string();
}

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(std::string("missing field \"") + key + "\"");
  return *it;
}

Profile read_profile(const json& j) {
  if (!j.is_array()) throw Error("profile must be an array of integers");
  Profile p;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error("profile entries must be integers");
    p.push_back(x.get<int>());
  }
  return p;
}

std::vector<PlayerInfo> read_players(const json& doc) {
  const auto& players = field(doc, "players");
  if (!players.is_array() || players.empty()) {
    throw Error("\"players\" must be a nonempty array");
  }
  std::vector<PlayerInfo> out;
  for (const auto& p : players) {
    PlayerInfo info;
    info.name = p.value("name", std::to_string(out.size() + 1));
    for (const auto& s : field(p, "strategies")) {
      info.strategies.push_back(s.get<std::string>());
    }
    if (info.strategies.empty()) {
      throw Error("player " + info.name + " has no strategies");
    }
    out.push_back(std::move(info));
  }
  return out;
}

// Player index, key and value of one utility or promise entry.
struct Entry {
  int player;
  Profile profile;
  ExtValue value;
};

std::vector<Entry> read_entries(const json& doc, const char* key,
                                int num_players) {
  std::vector<Entry> out;
  auto it = doc.find(key);
  if (it == doc.end()) return out;
  if (!it->is_array()) throw Error(std::string("\"") + key + "\" must be an array");
  std::set<std::pair<int, Profile>> seen;
  for (const auto& e : *it) {
    const auto& pj = field(e, "player");
    if (!pj.is_number_integer()) throw Error("player must be an integer");
    int player = pj.get<int>();
    if (player < 0 || player >= num_players) {
      throw Error(std::string(key) + ": player index out of range");
    }
    Profile profile = read_profile(field(e, "profile"));
    if (!seen.emplace(player, profile).second) {
      throw Error(std::string(key) + ": duplicate entry");
    }
    out.push_back({player, std::move(profile),
                   read_value(field(e, "value"), key)});
  }
  return out;
}

template <typename G>
void fill_utilities(G& game, const std::vector<Entry>& entries) {
  for (const auto& e : entries) {
    if (e.value.is_infinite()) throw Error("infinite utility");
    game.set_utility(e.player, e.profile, e.value.value());
  }
}

}  // namespace

std::vector<int> Instance::strategy_counts() const {
  return std::visit([](const auto& g) { return gimpl::strategy_counts(g); },
                    game);
}

int Instance::num_players() const {
  return std::visit([](const auto& g) { return g.num_players(); }, game);
}

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw Error("document must be a JSON object");
  try {
    if (doc.value("format", "") != "gipf-1") {
      throw Error("unsupported format (expected \"gipf-1\")");
    }
    std::string kind = doc.value("kind", "normal");
    auto players = read_players(doc);
    const int n = static_cast<int>(players.size());
    auto utilities = read_entries(doc, "utilities", n);

    Instance inst{Game(), std::nullopt, std::nullopt, std::nullopt};
    if (kind == "normal") {
      if (doc.contains("edges")) throw Error("edges given for a normal game");
      Game game(std::move(players));
      fill_utilities(game, utilities);
      inst.game = std::move(game);
    } else if (kind == "graphical") {
      std::vector<std::pair<int, int>> edges;
      if (auto it = doc.find("edges"); it != doc.end()) {
        for (const auto& e : *it) {
          if (!e.is_array() || e.size() != 2) {
            throw Error("edge must be a pair of player indices");
          }
          edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
      }
      GraphicalGame game(std::move(players), std::move(edges));
      fill_utilities(game, utilities);
      inst.game = std::move(game);
    } else {
      throw Error("unknown kind \"" + kind + "\"");
    }

    auto counts = inst.strategy_counts();
    if (auto it = doc.find("region"); it != doc.end()) {
      std::vector<std::vector<int>> sets;
      for (const auto& s : field(*it, "sets")) sets.push_back(read_profile(s));
      if (static_cast<int>(sets.size()) != n) {
        throw Error("region needs one desired set per player");
      }
      for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty()) {
          throw Error("empty desired set for player " + std::to_string(i));
        }
      }
      RectRegion region(std::move(sets));
      region.validate(counts);
      inst.region = std::move(region);
    }
    if (auto it = doc.find("budget"); it != doc.end()) {
      ExtValue budget = read_value(*it, "budget");
      if (budget.is_negative()) throw Error("negative budget");
      inst.budget = budget;
    }
    if (doc.contains("promise")) {
      PaymentPromise promise(n, inst.graphical() ? PromiseForm::kGraphical
                                                 : PromiseForm::kNormal);
      for (auto& e : read_entries(doc, "promise", n)) {
        if (e.value.is_negative()) throw Error("negative promise");
        promise.set(e.player, std::move(e.profile), e.value);
      }
      std::visit([&](const auto& g) { validate_promise(g, promise); },
                 inst.game);
      inst.promise = std::move(promise);
    }
    return inst;
  } catch (const json::exception& e) {
    throw Error(std::string("invalid document: ") + e.what());
  }
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const Instance& instance) {
  ordered_json doc;
  doc["format"] = "gipf-1";
  doc["kind"] = instance.graphical() ? "graphical" : "normal";
  ordered_json players = ordered_json::array();
  const auto& infos = std::visit(
      [](const auto& g) -> const std::vector<PlayerInfo>& { return g.players(); },
      instance.game);
  for (const auto& p : infos) {
    players.push_back({{"name", p.name}, {"strategies", p.strategies}});
  }
  doc["players"] = std::move(players);

  ordered_json utilities = ordered_json::array();
  auto push = [](ordered_json& arr, int player, const Profile& profile,
                 const ExtValue& value) {
    ordered_json e;
    e["player"] = player;
    e["profile"] = profile;
    e["value"] = write_value(value);
    arr.push_back(std::move(e));
  };
  if (const auto* gg = std::get_if<GraphicalGame>(&instance.game)) {
    for (int i = 0; i < gg->num_players(); ++i) {
      const auto& space = gg->local_space(i);
      for (std::size_t k = 0; k < space.size(); ++k) {
        Profile local = space.profile(k);
        const Rational& u = gg->utility(i, local);
        if (u != 0) push(utilities, i, local, ExtValue(u));
      }
    }
    doc["utilities"] = std::move(utilities);
    ordered_json edges = ordered_json::array();
    for (auto [a, b] : gg->edges()) edges.push_back({a, b});
    doc["edges"] = std::move(edges);
  } else {
    const auto& g = std::get<Game>(instance.game);
    for (int i = 0; i < g.num_players(); ++i) {
      for (std::size_t k = 0; k < g.space().size(); ++k) {
        const Rational& u = g.utility(i, k);
        if (u != 0) push(utilities, i, g.space().profile(k), ExtValue(u));
      }
    }
    doc["utilities"] = std::move(utilities);
  }
  if (instance.region) {
    doc["region"] = {{"sets", instance.region->sets()}};
  }
  if (instance.budget) doc["budget"] = write_value(*instance.budget);
  if (instance.promise) {
    ordered_json promise = ordered_json::array();
    for (int i = 0; i < instance.promise->num_players(); ++i) {
      for (const auto& [key, value] : instance.promise->entries(i)) {
        push(promise, i, key, value);
      }
    }
    doc["promise"] = std::move(promise);
  }
  return doc.dump(2) + "\n";
}

}  // namespace gimpl
