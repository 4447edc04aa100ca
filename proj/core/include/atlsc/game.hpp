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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atlsc/kripke.hpp"
#include "atlsc/types.hpp"

namespace atlsc {

/// One agent's observation equivalence, stored as an ordered list of classes.
///
/// Class order is the order in which the classes were given; states inside
/// a class are sorted. A partition built from malformed input (overlapping or
/// missing states) is representable so that validate() can report on it.
class ObservationPartition {
 public:
  ObservationPartition() = default;
  ObservationPartition(std::size_t num_states,
                       std::vector<std::vector<StateId>> classes);

  static ObservationPartition identity(std::size_t num_states);
  static ObservationPartition single_class(std::size_t num_states);

  const std::vector<std::vector<StateId>>& classes() const noexcept { return classes_; }
  std::size_t num_classes() const noexcept { return classes_.size(); }
  std::size_t num_states() const noexcept { return class_of_.size(); }

  /// Class of `q`, or kNoClass when no class covers it.
  ClassId class_of(StateId q) const { return class_of_.at(q); }

  bool equivalent(StateId a, StateId b) const {
    return class_of(a) != kNoClass && class_of(a) == class_of(b);
  }

  /// True when both partitions induce the same equivalence (order-insensitive).
  bool same_family(const ObservationPartition& other) const;

  /// States listed in more than one class.
  const std::vector<StateId>& duplicates() const noexcept { return duplicates_; }

 private:
  std::vector<std::vector<StateId>> classes_;
  std::vector<ClassId> class_of_;
  std::vector<StateId> duplicates_;
};

/// Concurrent game structure with partial observation.
///
/// Every move is available to every agent in every state, so the transition
/// table is a total map over states x moves^agents. Move vectors are indexed
/// in mixed radix with the first declared agent most significant, which makes
/// index order coincide with lexicographic vector order. The transition
/// relation is derived from the table and never stored.
struct Cgso {
  std::vector<std::string> states;
  std::vector<std::string> props;
  std::vector<std::string> agents;
  std::vector<std::string> moves;
  std::vector<std::set<std::string>> labels;
  /// states.size() * num_move_vectors() entries; kNoState marks a hole.
  std::vector<StateId> edges;
  /// One partition per agent.
  std::vector<ObservationPartition> observations;
  /// Present iff the game is declared turn-based.
  std::optional<std::vector<AgentId>> owner;
  std::optional<StateId> init;

  std::size_t num_states() const noexcept { return states.size(); }
  std::size_t num_agents() const noexcept { return agents.size(); }
  std::size_t num_moves() const noexcept { return moves.size(); }
  std::size_t num_move_vectors() const noexcept;

  std::size_t vector_index(std::span<const MoveId> moves_by_agent) const;
  std::vector<MoveId> decode_vector(std::size_t index) const;

  StateId edge(StateId q, std::size_t vector) const {
    return edges[static_cast<std::size_t>(q) * num_move_vectors() + vector];
  }
  StateId edge(StateId q, std::span<const MoveId> moves_by_agent) const {
    return edge(q, vector_index(moves_by_agent));
  }
  void set_edge(StateId q, std::size_t vector, StateId target) {
    edges[static_cast<std::size_t>(q) * num_move_vectors() + vector] = target;
  }
  /// Resizes the table for the current states/agents/moves, all holes.
  void reset_edges();

  /// Derived relation R: sorted distinct Edg images of `q`.
  std::vector<StateId> successors(StateId q) const;

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<AgentId> find_agent(std::string_view name) const;
  std::optional<MoveId> find_move(std::string_view name) const;
  bool has_label(StateId q, std::string_view prop) const;

  const ObservationPartition& observation(AgentId a) const { return observations.at(a); }
};

struct Diagnostic {
  std::string invariant;
  std::string message;
};

/// Checks every structural invariant of a game; empty iff the game is valid.
std::vector<Diagnostic> validate(const Cgso& game);

/// Throws Error(InvalidGame) carrying the first diagnostic.
void require_valid(const Cgso& game);

/// True iff all agents share the same observation equivalence.
bool is_uniform(const Cgso& game);

/// Complete graph over the observation classes of a uniform game; the node of
/// class c is labeled with the class atom of every member state.
KripkeStructure quotient(const Cgso& game);

/// Same states and derived transitions as the game, labels extended with the
/// state-identity atom and one observation-class atom per agent.
KripkeStructure underlying_kripke(const Cgso& game);

/// Sequentializes a concurrent game: agents move one after another in `order`
/// through intermediate states that carry the `mid` marker and are grouped in
/// one observation class per micro-depth.
Cgso to_turn_based(const Cgso& game, std::span<const AgentId> order);
Cgso to_turn_based(const Cgso& game);

/// True iff every consecutive pair of `path` is in the derived relation.
bool is_path(const Cgso& game, std::span<const StateId> path);

/// Observation equivalence of finite paths for one agent. Throws
/// Error(InvalidPath) if either argument is not a path of the game.
bool path_equivalent(const Cgso& game, AgentId agent, std::span<const StateId> lhs,
                     std::span<const StateId> rhs);

/// True iff the agent's move can change the successor of `q`.
bool move_matters(const Cgso& game, AgentId agent, StateId q);

/// States reachable from `from` (inclusive) in the derived relation.
std::vector<bool> reachable_from(const Cgso& game, StateId from);

/// Whether a name can be used as an identifier in formulas.
bool is_identifier(std::string_view name);

}  // namespace atlsc
