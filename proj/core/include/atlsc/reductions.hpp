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

#include <vector>

#include "atlsc/formula.hpp"
#include "atlsc/game.hpp"
#include "atlsc/kripke.hpp"

namespace atlsc {

/// A companion structure with the QCTL* formula to check on it.
struct Reduction {
  KripkeStructure structure;
  qctl::Formula formula;
};

namespace reductions {

/// Agents of a coalition in declaration order. Throws Error(UnknownAgent).
std::vector<AgentId> resolve(const Cgso& game, const Coalition& c);

/// Conjunction of the move atoms that move vector `vector` assigns to `agents`.
qctl::Formula move_profile(const Cgso& game, const std::vector<AgentId>& agents,
                           std::size_t vector);

// Uniform observation, tree semantics ---------------------------------------

/// Exactly one move atom per agent of A, at every reachable node.
qctl::Formula phi_strat(const Cgso& game, const Coalition& A);

/// The level atoms mark a single branch that follows the observation classes.
qctl::Formula phi_path(const Cgso& game, unsigned level);

/// The marked branch follows the moves chosen by the coalition B.
qctl::Formula phi_out(const Cgso& game, unsigned level, const Coalition& B);

/// Translation of a complement-free memoryful formula relative to coalition
/// B and level kappa. Throws Error(NotUniform), Error(ComplementPresent),
/// Error(MemorylessQuantifier).
qctl::Formula translate_tree(const Cgso& game, const atl::Formula& f, const Coalition& B,
                             unsigned level);

/// Quotient structure (with level-0 path atoms declared) and the closed
/// formula exists q#alpha@0. (translation & q#alpha@0).
Reduction build_uniform_reduction(const Cgso& game, StateId alpha, const atl::Formula& f);

// Memoryless strategies, structure semantics --------------------------------

/// Exactly one move atom per agent of A everywhere, constant on each
/// observation class of the agent.
qctl::Formula phi_stratm(const Cgso& game, const Coalition& A);

/// Along the path, every step is an edge whose B-part agrees with the move
/// atoms of the current state.
qctl::Formula phi_out_memoryless(const Cgso& game, const Coalition& B);

/// Translation of a complement-free memoryless formula relative to B.
/// Throws Error(MemoryfulQuantifier), Error(ComplementPresent).
qctl::Formula translate_memoryless(const Cgso& game, const atl::Formula& f, const Coalition& B);

/// Underlying structure with state and observation atoms, and the formula.
Reduction build_memoryless_reduction(const Cgso& game, const atl::Formula& f);

}  // namespace reductions
}  // namespace atlsc
