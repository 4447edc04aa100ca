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
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "atlsc/formula.hpp"
#include "atlsc/state_set.hpp"
#include "atlsc/types.hpp"

namespace atlsc {

struct LtlStats {
  std::size_t checks = 0;
  std::size_t product_states = 0;
  std::size_t elementaries = 0;  // largest elementary set seen
};

/// Resolves a proposition leaf of a linear-time formula to its state set.
using AtomLookup = std::function<const StateSet&(std::string_view)>;

/// Default cap on |reachable states| * 2^|elementaries| * |acceptance sets|.
inline constexpr std::size_t kMaxProductStates = std::size_t{1} << 22;

/// Tableau automaton of a linear-time formula, reusable across structures
/// and atom valuations.
///
/// `psi` may only use propositions, true/false, Boolean connectives, X and U;
/// state quantifiers must be abstracted into propositions by the caller. The
/// tableau has one state per (Kripke state, set of X-elementaries), one
/// acceptance set per Until, and is degeneralized with a round-robin counter
/// before the emptiness check. Successor tables depend only on the atom
/// valuation of a state and are cached per valuation.
class LtlTableau {
 public:
  explicit LtlTableau(const qctl::Formula& psi);
  ~LtlTableau();
  LtlTableau(const LtlTableau&) = delete;
  LtlTableau& operator=(const LtlTableau&) = delete;

  /// Proposition names in first-occurrence order.
  const std::vector<std::string>& atoms() const;
  std::size_t elementaries() const;
  std::size_t acceptance_sets() const;

  /// States q in `from` that start at least one infinite path satisfying the
  /// formula; `atom_sets` follows atoms(). Throws Error(ResourceLimit) when
  /// the product would exceed `max_product`.
  StateSet exists(const std::vector<std::vector<StateId>>& successors,
                  const std::vector<const StateSet*>& atom_sets, const StateSet& from,
                  LtlStats* stats = nullptr, std::size_t max_product = kMaxProductStates);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper around LtlTableau.
StateSet ltl_exists(const std::vector<std::vector<StateId>>& successors, const qctl::Formula& psi,
                    const AtomLookup& atom, const StateSet& from, LtlStats* stats = nullptr,
                    std::size_t max_product = kMaxProductStates);

/// States reachable from `from` (inclusive).
StateSet reachable(const std::vector<std::vector<StateId>>& successors, const StateSet& from);

/// CTL building blocks over an explicit successor relation.
StateSet pre_exists(const std::vector<std::vector<StateId>>& successors, const StateSet& target);
StateSet exists_until(const std::vector<std::vector<StateId>>& successors, const StateSet& hold,
                      const StateSet& target);
StateSet exists_always(const std::vector<std::vector<StateId>>& successors, const StateSet& hold);

}  // namespace atlsc
