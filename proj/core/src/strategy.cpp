/*
 * Copyright 2026 The atlsc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "atlsc/strategy.hpp"

#include <algorithm>
#include <deque>

#include "atlsc/error.hpp"
#include "history_graph.hpp"

namespace atlsc {

StrategyContext compose(const StrategyContext& g, const StrategyContext& f) {
  StrategyContext out = g;
  for (const auto& [agent, table] : f) out.emplace(agent, table);
  return out;
}

StrategyContext restrict_to(const StrategyContext& f, std::span<const AgentId> agents) {
  StrategyContext out;
  for (const auto& [agent, table] : f)
    if (std::find(agents.begin(), agents.end(), agent) != agents.end()) out.emplace(agent, table);
  return out;
}

StrategyContext restrict_without(const StrategyContext& f, std::span<const AgentId> agents) {
  StrategyContext out;
  for (const auto& [agent, table] : f)
    if (std::find(agents.begin(), agents.end(), agent) == agents.end()) out.emplace(agent, table);
  return out;
}

ClassWindow class_window(const Cgso& game, AgentId agent, std::size_t length,
                         std::span<const StateId> history) {
  const auto& part = game.observation(agent);
  const std::size_t from = history.size() > length ? history.size() - length : 0;
  ClassWindow out;
  out.reserve(history.size() - from);
  for (std::size_t i = from; i < history.size(); ++i) out.push_back(part.class_of(history[i]));
  return out;
}

bool class_matters(const Cgso& game, AgentId agent, ClassId cls) {
  for (StateId q : game.observation(agent).classes().at(cls))
    if (move_matters(game, agent, q)) return true;
  return false;
}

MoveId table_move(const Cgso& game, const StrategyTable& table, std::span<const StateId> history) {
  const ClassWindow key = class_window(game, table.agent, table.memory(), history);
  auto it = table.moves.find(key);
  if (it != table.moves.end()) return it->second;
  if (!class_matters(game, table.agent, key.back())) return 0;
  throw Error(ErrorKind::IncompatibleTable,
              "strategy of " + game.agents.at(table.agent) + " has no move after " +
                  game.states[history.back()]);
}

void check_table(const Cgso& game, const StrategyTable& table) {
  if (table.agent >= game.num_agents())
    throw Error(ErrorKind::IncompatibleTable, "strategy for an undeclared agent");
  const std::size_t classes = game.observation(table.agent).num_classes();
  for (const auto& [key, move] : table.moves) {
    if (key.empty() || key.size() > table.memory())
      throw Error(ErrorKind::IncompatibleTable, "strategy key length does not match its window");
    for (ClassId c : key)
      if (c >= classes) throw Error(ErrorKind::IncompatibleTable, "strategy key names an unknown class");
    if (move >= game.num_moves())
      throw Error(ErrorKind::IncompatibleTable, "strategy plays an undeclared move");
  }
}

KripkeStructure pruned_system(const Cgso& game, const StrategyContext& context,
                              std::span<const StateId> anchor) {
  if (!is_path(game, anchor))
    throw Error(ErrorKind::InvalidPath, "anchor is not a finite path of the game");
  std::size_t memory = 1;
  for (const auto& [agent, table] : context) {
    if (agent != table.agent)
      throw Error(ErrorKind::IncompatibleTable, "context entry filed under the wrong agent");
    check_table(game, table);
    memory = std::max(memory, table.memory());
  }
  detail::HistoryGraph graph(game, memory, std::size_t{1} << 22);

  KripkeStructure k;
  k.props = game.props;
  std::vector<StateId> local;  // graph node -> structure state
  auto add = [&](detail::HistoryGraph::NodeId u) {
    if (u >= local.size()) local.resize(u + 1, kNoState);
    if (local[u] == kNoState) {
      const std::string name = memory == 1 ? game.states[graph.state(u)] : graph.name(u);
      local[u] = k.add_state(name, game.labels[graph.state(u)]);
      return true;
    }
    return false;
  };
  const auto root = graph.intern(anchor);
  add(root);
  k.init = local[root];
  std::deque<detail::HistoryGraph::NodeId> todo{root};
  while (!todo.empty()) {
    const auto u = todo.front();
    todo.pop_front();
    std::vector<std::pair<AgentId, MoveId>> fixed;
    for (const auto& [agent, table] : context)
      fixed.emplace_back(agent, table_move(game, table, graph.window(u)));
    std::vector<detail::HistoryGraph::NodeId> next;
    for (std::size_t v = 0; v < graph.vectors().size(); ++v) {
      const auto& vec = graph.vectors()[v];
      if (std::all_of(fixed.begin(), fixed.end(),
                      [&](const auto& f) { return vec[f.first] == f.second; }))
        next.push_back(graph.step(u, v));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (auto t : next) {
      if (add(t)) todo.push_back(t);
      k.add_transition(local[u], local[t]);
    }
  }
  return k;
}

std::string class_text(const Cgso& game, AgentId agent, ClassId cls) {
  std::string out = "{";
  for (StateId q : game.observation(agent).classes().at(cls)) {
    if (out.size() > 1) out += ' ';
    out += game.states[q];
  }
  return out + "}";
}

std::vector<std::string> format_strategy(const Cgso& game, const StrategyTable& table) {
  std::vector<std::string> out;
  const std::string head = "strategy " + game.agents.at(table.agent) + " " +
                           (table.memoryless() ? std::string("memoryless")
                                               : "window" + std::to_string(table.window)) +
                           ": ";
  for (const auto& [key, move] : table.moves) {
    if (!class_matters(game, table.agent, key.back())) continue;
    std::string lhs;
    if (table.memoryless()) {
      lhs = class_text(game, table.agent, key.back());
    } else {
      lhs = "(";
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) lhs += ' ';
        lhs += class_text(game, table.agent, key[i]);
      }
      lhs += ")";
    }
    out.push_back(head + lhs + " -> " + game.moves.at(move));
  }
  return out;
}

}  // namespace atlsc
