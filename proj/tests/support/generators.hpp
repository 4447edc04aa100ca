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
#include <random>
#include <string>
#include <vector>

#include "atlsc/formula.hpp"
#include "atlsc/game.hpp"
#include "atlsc/kripke.hpp"

namespace atlsc::testing {

using Rng = std::mt19937_64;

struct GameShape {
  std::size_t min_states = 2;
  std::size_t max_states = 4;
  std::size_t agents = 2;
  std::size_t moves = 2;
  std::vector<std::string> props{"p", "q"};
  /// Chance that every agent gets the same partition.
  double uniform_bias = 0.5;
  /// Force singleton classes for every agent.
  bool identity_observation = false;
};

Cgso random_game(Rng& rng, const GameShape& shape);

/// Random total structure over `props`.
KripkeStructure random_kripke(Rng& rng, std::size_t states, const std::vector<std::string>& props,
                              std::size_t max_out = 2);

struct AtlShape {
  std::vector<std::string> agents{"a1", "a2"};
  std::vector<std::string> props{"p", "q"};
  int strat_depth = 2;
  int temporal_depth = 3;
  StrategyMode mode = StrategyMode::Memoryless;
  bool allow_relax = true;
  bool allow_complements = false;
  bool mixed_modes = false;
};

/// Random state formula within the given depths.
atl::Formula random_atl(Rng& rng, const AtlShape& shape);

struct QctlShape {
  std::vector<std::string> props{"p", "q"};
  std::vector<std::string> bound{"P1", "P2"};
  int quantifier_depth = 1;
  int temporal_depth = 2;
  int path_quantifier_depth = 2;
  bool allow_quantifiers = true;
};

/// Random QCTL* state formula; bound props are only used under their binder.
qctl::Formula random_qctl(Rng& rng, const QctlShape& shape);

/// Random linear-time path formula over props (no path quantifiers).
qctl::Formula random_ltl(Rng& rng, const std::vector<std::string>& props, int depth);

}  // namespace atlsc::testing
