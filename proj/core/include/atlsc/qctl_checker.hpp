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
#include <memory>
#include <string>
#include <vector>

#include "atlsc/formula.hpp"
#include "atlsc/kripke.hpp"
#include "atlsc/ltl_automaton.hpp"
#include "atlsc/state_set.hpp"

namespace atlsc {

/// Three-valued verdict over all states: `lo` holds for every completion of
/// the current partial valuation, `hi` for at least one. lo is a subset of hi.
struct Truth {
  StateSet lo;
  StateSet hi;

  bool exact() const { return lo == hi; }
};

/// Reads ATLSC_MAX_QUANT_DEPTH, default 8.
int default_max_quantifier_depth();

struct QctlOptions {
  /// Maximum nesting of quantifier blocks (a maximal chain of the same
  /// quantifier counts once).
  int max_quantifier_depth = default_max_quantifier_depth();
  std::size_t max_product = kMaxProductStates;
};

struct QctlStats {
  std::size_t search_nodes = 0;
  std::size_t memo_hits = 0;
  std::size_t evaluations = 0;
  LtlStats ltl;
};

struct Valuation {
  std::string prop;
  std::vector<StateId> states;
};

/// Structure-semantics QCTL* model checker.
///
/// A block of existential quantifiers is decided by a depth-first search over
/// the bits (state, proposition) of the states reachable from the demanded
/// states, states in declaration order, propositions in binding order, 0
/// before 1. At each search node the body is evaluated three-valued; branches
/// whose upper bound misses every pending state are cut. Universal blocks are
/// checked as negated existential ones.
class QctlChecker {
 public:
  explicit QctlChecker(const KripkeStructure& k, QctlOptions options = {});
  ~QctlChecker();
  QctlChecker(const QctlChecker&) = delete;
  QctlChecker& operator=(const QctlChecker&) = delete;

  /// Decides k, q |= f. When f is an existential block and holds, witness()
  /// returns the first satisfying valuation in search order.
  bool check(StateId q, const qctl::Formula& f);

  /// All states satisfying the state formula f.
  StateSet satisfying_states(const qctl::Formula& f);

  const std::vector<Valuation>& witness() const;
  const QctlStats& stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Throws Error(Stratification) for path formulas, Error(UnknownProp) for
/// propositions neither declared in k nor bound, Error(ResourceLimit) past
/// the depth guard.
bool check_structure(const KripkeStructure& k, StateId q, const qctl::Formula& f);

/// Quantifier-free entry point; Error(EngineMismatch) if f has quantifiers.
bool check_ctlstar(const KripkeStructure& k, StateId q, const qctl::Formula& f);

/// Nesting depth of quantifier blocks.
int quantifier_block_depth(const qctl::Formula& f);

}  // namespace atlsc
