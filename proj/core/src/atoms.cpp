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

#include "atlsc/atoms.hpp"

#include "atlsc/game.hpp"

namespace atlsc {

std::string FreshAtomRegistry::path_atom(StateId i, unsigned level) const {
  return "q#" + std::to_string(i) + "@" + std::to_string(level);
}

std::string FreshAtomRegistry::move_atom(AgentId a, MoveId j) const {
  return "m#" + game_->agents.at(a) + "@" + std::to_string(j + 1);
}

std::string FreshAtomRegistry::class_atom(StateId i) const {
  return "s#" + std::to_string(i);
}

std::string FreshAtomRegistry::state_atom(StateId q) const {
  return "p#" + game_->states.at(q);
}

std::string FreshAtomRegistry::obs_atom(AgentId a, ClassId c) const {
  return "o#" + game_->agents.at(a) + "@" + std::to_string(c);
}

}  // namespace atlsc
