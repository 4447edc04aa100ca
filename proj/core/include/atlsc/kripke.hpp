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
#include <string>
#include <string_view>
#include <vector>

#include "atlsc/types.hpp"

namespace atlsc {

/// Finite labeled transition system.
///
/// `props` is the declared proposition universe; a proposition may be
/// declared without labeling any state.
struct KripkeStructure {
  std::vector<std::string> states;
  std::vector<std::string> props;
  std::vector<std::vector<StateId>> successors;
  std::vector<std::set<std::string>> labels;
  std::optional<StateId> init;

  std::size_t size() const noexcept { return states.size(); }
  std::size_t transition_count() const noexcept;

  std::optional<StateId> find_state(std::string_view name) const;
  bool has_prop(std::string_view prop) const;
  bool has_label(StateId q, std::string_view prop) const;

  /// Adds a state and returns its index.
  StateId add_state(std::string name, std::set<std::string> label = {});
  void add_transition(StateId from, StateId to);

  /// Totality and range diagnostics; empty when well formed.
  std::vector<std::string> check() const;
};

/// Text form: `props:`, `states:`, `label q:`, `trans q:`, `init:` lines.
std::string write_kripke(const KripkeStructure& k);
KripkeStructure read_kripke(std::string_view text);

}  // namespace atlsc
