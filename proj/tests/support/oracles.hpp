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

#include "atlsc/formula.hpp"
#include "atlsc/kripke.hpp"

namespace atlsc::testing {

/// Explicit-path reference checker for QCTL* under the structure semantics.
///
/// Path quantifiers enumerate every lasso (a finite path plus a loop back to
/// one of its positions) of at most `max_lasso` states; propositional
/// quantifiers enumerate all 2^|Q| labelings. Exact whenever witnesses fit in
/// the lasso bound, which holds for the small instances the tests use.
class LassoOracle {
 public:
  LassoOracle(const KripkeStructure& k, std::size_t max_lasso) : k_(k), max_lasso_(max_lasso) {}

  bool check(StateId q, const qctl::Formula& f);

 private:
  const KripkeStructure& k_;
  std::size_t max_lasso_;
};

}  // namespace atlsc::testing
