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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atlsc/game.hpp"
#include "atlsc/kripke.hpp"
#include "atlsc/types.hpp"

namespace atlsc {

/// Sequence of observation classes of one agent, most recent last.
using ClassWindow = std::vector<ClassId>;

/// Observation-compatible strategy of one agent.
///
/// `window == 0` is a memoryless strategy keyed by the current class alone
/// (keys of length 1). A windowed strategy with `window == k` is keyed by the
/// last min(k, history length) classes. Entries may be left out for windows
/// whose last class only holds states where the agent's move cannot change
/// the successor; such windows play the first move.
struct StrategyTable {
  AgentId agent = 0;
  unsigned window = 0;
  std::map<ClassWindow, MoveId> moves;

  /// Number of trailing states of a history the table looks at.
  std::size_t memory() const noexcept { return window == 0 ? 1 : window; }
  bool memoryless() const noexcept { return window == 0; }

  friend bool operator==(const StrategyTable&, const StrategyTable&) = default;
  friend auto operator<=>(const StrategyTable&, const StrategyTable&) = default;
};

/// Partial assignment of strategies to agents.
using StrategyContext = std::map<AgentId, StrategyTable>;

/// Union of both contexts; `g` wins on shared agents.
StrategyContext compose(const StrategyContext& g, const StrategyContext& f);

/// Entries of `f` for agents in `agents` / not in `agents`.
StrategyContext restrict_to(const StrategyContext& f, std::span<const AgentId> agents);
StrategyContext restrict_without(const StrategyContext& f, std::span<const AgentId> agents);

/// The agent's class window after the finite path `history`.
ClassWindow class_window(const Cgso& game, AgentId agent, std::size_t length,
                         std::span<const StateId> history);

/// True iff the agent's move can change the successor of some state of the class.
bool class_matters(const Cgso& game, AgentId agent, ClassId cls);

/// Move the table prescribes after `history`. Throws Error(IncompatibleTable)
/// when the window is missing but the move matters there.
MoveId table_move(const Cgso& game, const StrategyTable& table, std::span<const StateId> history);

/// Throws Error(IncompatibleTable) if a key is not a window of the agent's
/// classes or a move is undeclared.
void check_table(const Cgso& game, const StrategyTable& table);

/// Transition system whose infinite paths from its initial node are exactly
/// the outcomes of `context` after `anchor`. A node is a game state together
/// with the last states needed by the longest window of the context; node
/// names are the state name, or the dot-joined recent states when windows
/// are longer than one. Labels are the game labels.
KripkeStructure pruned_system(const Cgso& game, const StrategyContext& context,
                              std::span<const StateId> anchor);

/// Text form, one line per prescribed entry whose move matters:
/// `strategy a1 memoryless: {q2 q3} -> m1` or
/// `strategy a1 window3: ({q0} {q2 q3}) -> m2`.
std::vector<std::string> format_strategy(const Cgso& game, const StrategyTable& table);

/// Class rendered as its member states, e.g. `{q2 q3}`.
std::string class_text(const Cgso& game, AgentId agent, ClassId cls);

}  // namespace atlsc
