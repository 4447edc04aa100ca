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
#include <cstdint>
#include <vector>

#include "atlsc/formula.hpp"
#include "atlsc/game.hpp"
#include "atlsc/ltl_automaton.hpp"
#include "atlsc/report.hpp"
#include "atlsc/strategy.hpp"

namespace atlsc {

/// Cap on history-window nodes; ATLSC_MAX_WINDOW_NODES overrides the default.
std::size_t default_max_window_nodes();

struct DirectOptions {
  std::size_t max_window_nodes = default_max_window_nodes();
  /// Cap on complete strategy assignments tried over one run.
  std::uint64_t max_tables = std::uint64_t{1} << 32;
};

struct DirectStats {
  std::uint64_t history_nodes = 0;
  std::uint64_t search_nodes = 0;
  std::uint64_t tables = 0;
  std::uint64_t outcome_checks = 0;
  std::uint64_t memo_hits = 0;
  LtlStats ltl;
};

struct DirectResult {
  bool verdict = false;
  /// Tables chosen by the satisfied quantifiers at the root, in evaluation order.
  std::vector<StrategyTable> witnesses;
  DirectStats stats;
};

/// Decides the formula at `q0` with every quantifier ranging over memoryless
/// compatible strategies. Complement operators are eliminated first.
/// Throws Error(MemoryfulQuantifier) for memoryful quantifiers over a
/// non-empty coalition.
DirectResult decide_memoryless(const Cgso& game, StateId q0, const atl::Formula& f,
                               const DirectOptions& options = {});

/// Decides the formula at `q0` with memoryful quantifiers ranging over
/// strategies that depend on the last `k` observation classes and memoryless
/// quantifiers over memoryless ones. Throws Error(ResourceLimit) above the caps.
DirectResult decide_windowed(const Cgso& game, StateId q0, const atl::Formula& f, unsigned k,
                             const DirectOptions& options = {});

/// Report wrappers with formatted witnesses and flattened statistics.
CheckReport check_memoryless(const Cgso& game, StateId q0, const atl::Formula& f,
                             const DirectOptions& options = {});
CheckReport check_windowed(const Cgso& game, StateId q0, const atl::Formula& f, unsigned k,
                           const DirectOptions& options = {});

}  // namespace atlsc
