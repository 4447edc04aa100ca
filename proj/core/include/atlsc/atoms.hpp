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

#include <cstdint>
#include <string>
#include <string_view>

#include "atlsc/types.hpp"

namespace atlsc {

struct Cgso;

/// Names of the reserved proposition families used by the reductions.
///
/// Every reserved name contains `#`, which user names may not, so the
/// families never collide with game propositions. The encoding is injective:
///   q#<i>@<k>        path atom of state index i at quantifier level k
///   m#<agent>@<j>    move atom, j is the 1-based move index
///   s#<i>            class atom of state index i (quotient structure)
///   p#<state>        state-identity atom (underlying structure)
///   o#<agent>@<c>    observation-class atom, c is the class index
class FreshAtomRegistry {
 public:
  explicit FreshAtomRegistry(const Cgso& game) : game_(&game) {}

  std::string path_atom(StateId i, unsigned level) const;
  std::string move_atom(AgentId a, MoveId j) const;
  std::string class_atom(StateId i) const;
  std::string state_atom(StateId q) const;
  std::string obs_atom(AgentId a, ClassId c) const;

  const Cgso& game() const noexcept { return *game_; }

 private:
  const Cgso* game_;
};

namespace atoms {

/// Marker carried by the intermediate states of a turn-based transformation.
inline constexpr std::string_view kMid = "mid";

inline bool is_reserved(std::string_view name) {
  return name.find('#') != std::string_view::npos;
}

}  // namespace atoms
}  // namespace atlsc
