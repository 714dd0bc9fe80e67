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

#include "gimpl/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gimpl/domination.h"
#include "gimpl/error.h"
#include "gimpl/implementation.h"
#include "gimpl/instance_io.h"
#include "gimpl/oracle.h"
#include "gimpl/reductions.h"
#include "gimpl/solver.h"
#include "json.hpp"

namespace gimpl {
namespace {

using nlohmann::ordered_json;

struct Outcome {
  bool yes = true;
  ordered_json payload;
};

const std::vector<PlayerInfo>& players_of(const Instance& inst) {
  return std::visit(
      [](const auto& g) -> const std::vector<PlayerInfo>& {
        return g.players();
      },
      inst.game);
}

ordered_json region_names(const std::vector<PlayerInfo>& players,
                          const RectRegion& region) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < region.num_players(); ++i) {
    ordered_json names = ordered_json::array();
    for (int s : region.set(i)) names.push_back(players[i].strategies[s]);
    out.push_back(std::move(names));
  }
  return out;
}

ordered_json mapping_json(const std::vector<PlayerInfo>& players,
                          const DominatorMapping& mapping) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < mapping.targets.size(); ++i) {
    for (auto [from, to] : mapping.targets[i]) {
      out.push_back({{"player", i},
                     {"from", players[i].strategies[from]},
                     {"to", players[i].strategies[to]}});
    }
  }
  return out;
}

ModifiedGameView make_view(const Instance& inst) {
  return std::visit(
      [&](const auto& g) {
        return inst.promise ? ModifiedGameView(g, *inst.promise)
                            : ModifiedGameView(g);
      },
      inst.game);
}

const RectRegion& require_region(const Instance& inst) {
  if (!inst.region) throw Error("instance has no region");
  return *inst.region;
}

Game normal_form(const Instance& inst) {
  if (const auto* gg = std::get_if<GraphicalGame>(&inst.game)) {
    return expand_graphical(*gg);
  }
  return std::get<Game>(inst.game);
}

ordered_json embedded(const Instance& inst) {
  return ordered_json::parse(serialize_instance(inst));
}

Outcome cmd_analyze(const Instance& inst) {
  ModifiedGameView view = make_view(inst);
  const auto& players = players_of(inst);
  RectRegion star = undominated_region(view);
  Outcome o;
  o.payload["undominated"] = region_names(players, star);
  ordered_json dominated = ordered_json::array();
  for (int i = 0; i < view.num_players(); ++i) {
    for (int y = 0; y < view.num_strategies(i); ++y) {
      if (star.contains(i, y)) continue;
      int x = find_dominator(view, i, y);
      dominated.push_back({{"player", i},
                           {"strategy", players[i].strategies[y]},
                           {"dominated_by", players[i].strategies[x]}});
    }
  }
  o.payload["dominated"] = std::move(dominated);
  o.payload["cost"] = cost(view).to_string();
  if (inst.region) {
    o.payload["region_size"] = inst.region->size();
  }
  return o;
}

Outcome cmd_verify(const Instance& inst, bool exact) {
  const RectRegion& region = require_region(inst);
  ExtValue budget = inst.budget.value_or(ExtValue::infinity());
  ModifiedGameView view = make_view(inst);
  auto report = verify(view, region, budget,
                       exact ? VerifyMode::kExact : VerifyMode::kSubset);
  const auto& players = players_of(inst);
  Outcome o;
  o.yes = report.holds;
  o.payload["mode"] = exact ? "exact" : "subset";
  o.payload["cost"] = report.cost.to_string();
  o.payload["budget"] = report.budget.to_string();
  o.payload["undominated"] = region_names(players, report.undominated_region);
  if (report.violation) {
    const auto& v = *report.violation;
    o.payload["violation"] = {
        {"player", v.player},
        {"strategy", players[v.player].strategies[v.strategy]},
        {"kind", v.undesired_survivor ? "undesired_undominated"
                                      : "desired_dominated"}};
  }
  return o;
}

Outcome cmd_solve(const Instance& inst, bool exactify_flag, unsigned jobs,
                  const std::string& output) {
  const RectRegion& region = require_region(inst);
  Game game = normal_form(inst);
  SolveOptions options;
  options.jobs = jobs;
  if (exactify_flag) {
    auto report = is_equitable(game, region);
    if (!report.equitable) {
      std::ostringstream msg;
      msg << "not equitable; margins per player:";
      for (auto m : report.margins) msg << ' ' << m;
      throw Error(msg.str());
    }
  }
  SolveResult result = exactify_flag ? solve_exact(game, region, options)
                                     : min_budget_solve(game, region, options);
  Instance solved{game, region, result.delta, result.promise};
  Outcome o;
  o.payload["delta"] = result.delta.to_string();
  o.payload["exactified"] = result.exactified;
  o.payload["mapping"] = mapping_json(game.players(), result.mapping);
  o.payload["instance"] = embedded(solved);
  if (!output.empty()) {
    std::ofstream file(output);
    if (!file) throw Error("cannot write " + output);
    file << serialize_instance(solved);
  }
  return o;
}

Outcome cmd_pne(const Instance& inst) {
  const RectRegion& region = require_region(inst);
  ModifiedGameView view = std::visit(
      [](const auto& g) { return ModifiedGameView(g); }, inst.game);
  PneReport report = is_pne(view, region);
  const auto& players = players_of(inst);
  Outcome o;
  o.yes = report.holds;
  if (report.defector) {
    auto [i, s] = *report.defector;
    o.payload["defector"] = {{"player", i},
                             {"strategy", players[i].strategies[s]}};
  }
  ordered_json counters = ordered_json::array();
  for (std::size_t i = 0; i < report.counters.size(); ++i) {
    for (auto [from, by] : report.counters[i]) {
      counters.push_back({{"player", i},
                          {"strategy", players[i].strategies[from]},
                          {"countered_by", players[i].strategies[by]}});
    }
  }
  o.payload["counters"] = std::move(counters);
  if (report.holds) {
    PaymentPromise promise = std::visit(
        [&](const auto& g) { return zero_cost_promise(g, region); }, inst.game);
    Instance out{inst.game, region, ExtValue(0), std::move(promise)};
    o.payload["instance"] = embedded(out);
  }
  return o;
}

Outcome cmd_oracle(const Instance& inst) {
  const RectRegion& region = require_region(inst);
  Game game = normal_form(inst);
  OracleResult result = oracle_min_budget(game, region);
  Outcome o;
  o.payload["delta"] = result.delta.to_string();
  ordered_json optimal = ordered_json::array();
  for (const auto& m : result.all_optimal_mappings) {
    optimal.push_back(mapping_json(game.players(), m));
  }
  o.payload["optimal_mappings"] = std::move(optimal);
  ordered_json landscape = ordered_json::array();
  for (const auto& [m, c] : result.per_mapping_costs) {
    landscape.push_back({{"mapping", mapping_json(game.players(), m)},
                         {"bound", c.to_string()}});
  }
  o.payload["landscape"] = std::move(landscape);
  return o;
}

Force parse_force(const std::string& text) {
  if (text == "yes") return Force::kYes;
  if (text == "no") return Force::kNo;
  return Force::kAny;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GIMPL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error("GIMPL_SEED is not an unsigned integer");
    }
  }
  return 0;
}

// The generators print the instance document itself.
std::string gen_x3c_doc(int n, std::uint64_t seed, const std::string& force,
                        const std::string& target, bool with_promise) {
  X3CInstance x3c = gen_x3c(n, seed, parse_force(force));
  std::optional<ExactCover> cover;
  if (with_promise) cover = brute_x3c(x3c);
  if (target == "graphical") {
    auto red = x3c_to_graphical(x3c);
    Instance inst{red.game, red.region, red.budget, std::nullopt};
    if (cover) {
      inst.promise = x3c_forward_promise_graphical(x3c, *cover, red.budget);
    }
    return serialize_instance(inst);
  }
  auto red = x3c_to_two_player(x3c);
  Instance inst{red.game, red.region, red.budget, std::nullopt};
  if (cover) inst.promise = x3c_forward_promise_2p(x3c, *cover);
  return serialize_instance(inst);
}

Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    Graph g{doc.at("vertices").get<int>(), {}};
    for (const auto& e : doc.at("edges")) {
      g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    g.validate();
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid graph file: ") + e.what());
  }
}

std::string gen_coloring_doc(const std::string& path, bool with_promise) {
  Graph graph = read_graph(path);
  auto red = coloring_to_exact(graph);
  Instance inst{red.game, red.region, red.budget, std::nullopt};
  if (with_promise) {
    if (auto coloring = brute_coloring(graph)) {
      inst.promise = coloring_forward_promise(graph, *coloring);
    }
  }
  return serialize_instance(inst);
}

Outcome cmd_decode(const Instance& inst, const std::string& kind) {
  PaymentPromise promise =
      inst.promise.value_or(PaymentPromise(inst.num_players(),
                                           inst.graphical()
                                               ? PromiseForm::kGraphical
                                               : PromiseForm::kNormal));
  Outcome o;
  if (kind == "x3cgraph") {
    const auto* gg = std::get_if<GraphicalGame>(&inst.game);
    if (!gg) throw Error("x3cgraph decoding needs a graphical instance");
    o.payload["cover"] = decode_cover_graphical(*gg, promise);
  } else {
    const auto* g = std::get_if<Game>(&inst.game);
    if (!g) throw Error(kind + " decoding needs a normal-form instance");
    if (kind == "x3c2p") {
      o.payload["cover"] = decode_cover_2p(*g, promise);
    } else {
      ColoringInstance ci = decode_coloring(*g, promise);
      o.payload["vertices"] = ci.graph.vertices;
      o.payload["edges"] = ci.graph.edges;
      o.payload["coloring"] = *ci.coloring;
    }
  }
  return o;
}

void emit(std::ostream& out, const std::string& status, ordered_json payload) {
  ordered_json doc;
  doc["status"] = status;
  for (auto& [k, v] : payload.items()) doc[k] = std::move(v);
  out << doc.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Game implementation toolkit"};
  app.require_subcommand(1);

  std::string file;
  bool exact = false;
  bool exactify_flag = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string output;
  std::string kind;

  auto* analyze = app.add_subcommand("analyze", "Undominated strategies");
  analyze->add_option("file", file)->required();
  auto* verify_cmd = app.add_subcommand("verify", "Check a promise");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_flag("--exact", exact, "Require exact implementation");
  auto* solve = app.add_subcommand("solve", "Minimum-budget promise");
  solve->add_option("file", file)->required();
  solve->add_flag("--exactify", exactify_flag, "Make the implementation exact");
  solve->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  solve->add_option("--output", output, "Write the solved instance here");
  auto* pne = app.add_subcommand("pne", "Promise-Nash equilibrium check");
  pne->add_option("file", file)->required();
  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference solver");
  oracle->add_option("file", file)->required();
  auto* decode = app.add_subcommand("decode", "Recover a combinatorial solution");
  decode->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"x3c2p", "x3cgraph", "coloring"}));
  decode->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen", "Reduction instances");
  gen->require_subcommand(1);
  int n = 1;
  std::optional<std::uint64_t> seed;
  std::string force = "any";
  std::string target = "2p";
  std::string edges;
  bool with_promise = false;
  auto* gen_x3c_cmd = gen->add_subcommand("x3c", "Exact cover reductions");
  gen_x3c_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  gen_x3c_cmd->add_option("--seed", seed);
  gen_x3c_cmd->add_option("--force", force)
      ->check(CLI::IsMember({"yes", "no", "any"}));
  gen_x3c_cmd->add_option("--target", target)
      ->check(CLI::IsMember({"2p", "graphical"}));
  gen_x3c_cmd->add_flag("--with-promise", with_promise);
  auto* gen_col = gen->add_subcommand("coloring", "3-coloring reduction");
  gen_col->add_option("--edges", edges)->required();
  gen_col->add_flag("--with-promise", with_promise);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    emit(out, "error", {{"message", e.what()}});
    return kExitError;
  }

  try {
    if (*gen_x3c_cmd) {
      out << gen_x3c_doc(n, resolve_seed(seed), force, target, with_promise);
      return kExitYes;
    }
    if (*gen_col) {
      out << gen_coloring_doc(edges, with_promise);
      return kExitYes;
    }
    Instance inst = read_instance_file(file);
    Outcome o;
    if (*analyze) {
      o = cmd_analyze(inst);
    } else if (*verify_cmd) {
      o = cmd_verify(inst, exact);
    } else if (*solve) {
      o = cmd_solve(inst, exactify_flag, jobs, output);
    } else if (*pne) {
      o = cmd_pne(inst);
    } else if (*oracle) {
      o = cmd_oracle(inst);
    } else {
      o = cmd_decode(inst, kind);
    }
    emit(out, o.yes ? "yes" : "no", std::move(o.payload));
    return o.yes ? kExitYes : kExitNo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    emit(out, "error", {{"message", e.what()}});
    return kExitError;
  }
}

}  // namespace gimpl
