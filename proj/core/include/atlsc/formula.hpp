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
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace atlsc {

struct SourcePos {
  std::uint32_t line = 0;
  std::uint32_t column = 0;
};

/// Sorted, duplicate-free list of agent names.
using Coalition = std::vector<std::string>;

Coalition make_coalition(std::vector<std::string> agents);

enum class StrategyMode { Memoryful, Memoryless };

// ---------------------------------------------------------------------------
// ATLsc* / ATLsc0

namespace atl {

enum class Kind {
  True,
  False,
  Prop,
  Not,
  And,
  Or,
  Implies,
  StratQ,    // <<A>> / <<A>>_0
  StratQCo,  // <<co A>> / <<co A>>_0
  Relax,     // relax(A)
  RelaxCo,   // keep(A)
  Next,
  Until,
};

struct Node;
using Formula = std::shared_ptr<const Node>;

/// Immutable formula node. Derived operators (F, G, [[A]], E, A) have no node
/// kind of their own; the builders below expand them.
struct Node {
  Kind kind;
  std::string prop;
  Coalition coalition;
  StrategyMode mode = StrategyMode::Memoryful;
  std::vector<Formula> children;
  SourcePos pos;

  const Formula& child(std::size_t i = 0) const { return children.at(i); }
};

Formula tt();
Formula ff();
Formula prop(std::string name);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula strat(Coalition c, StrategyMode mode, Formula f);
Formula strat_co(Coalition c, StrategyMode mode, Formula f);
Formula relax(Coalition c, Formula f);
Formula relax_co(Coalition c, Formula f);
Formula next(Formula f);
Formula until(Formula a, Formula b);

Formula eventually(Formula f);  // true U f
Formula always(Formula f);      // !F !f
Formula box(Coalition c, StrategyMode mode, Formula f);  // ![[c]] !f
/// All paths: keep() <<>>_0 f.
Formula all_paths(Formula f);
/// Some path: !A !f.
Formula some_path(Formula f);

Formula with_pos(Formula f, SourcePos pos);

/// Structural equality, source positions ignored.
bool equal(const Formula& a, const Formula& b);

/// Node count of the tree.
std::size_t size(const Formula& f);

/// True iff `f` is well formed in state position (no temporal operator
/// outside a strategy quantifier).
bool is_state_formula(const Formula& f);

/// Maximum nesting of strategy quantifiers (both complement forms count).
int strat_depth(const Formula& f);

/// Maximum nesting of Next.
int next_depth(const Formula& f);

bool has_complements(const Formula& f);
/// True if some quantifier with a non-empty coalition has the given mode.
bool has_mode(const Formula& f, StrategyMode mode);

/// Agents named anywhere in the formula.
std::set<std::string> agents_of(const Formula& f);
std::set<std::string> props_of(const Formula& f);

/// Rewrites <<co A>> into <<Agt \ A>> and keep(A) into relax(Agt \ A).
/// Throws Error(UnknownAgent) if a coalition leaves `agents`.
Formula eliminate_complements(const Formula& f, const std::vector<std::string>& agents);

/// Formula translation for the turn-based transformation with `num_agents`
/// micro-steps per round: X f becomes p nested X, and
/// f U g becomes (mid | f) U (!mid & g).
Formula translate_formula_tb(const Formula& f, std::size_t num_agents);

/// Parses a state formula. Throws Error(Syntax) or Error(Stratification).
Formula parse(std::string_view text);
/// Canonical text; parse(print(f)) is structurally equal to f.
std::string print(const Formula& f);

}  // namespace atl

// ---------------------------------------------------------------------------
// QCTL*

namespace qctl {

enum class Kind {
  True,
  False,
  Prop,
  Not,
  And,
  Or,
  Implies,
  Exists,
  Forall,
  EPath,
  APath,
  Next,
  Until,
};

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  std::string prop;  // Prop name, or the bound proposition of Exists/Forall
  std::vector<Formula> children;
  SourcePos pos;

  const Formula& child(std::size_t i = 0) const { return children.at(i); }
};

Formula tt();
Formula ff();
Formula prop(std::string name);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula exists(std::string p, Formula f);
Formula forall(std::string p, Formula f);
Formula epath(Formula f);
Formula apath(Formula f);
Formula next(Formula f);
Formula until(Formula a, Formula b);

Formula eventually(Formula f);
Formula always(Formula f);
Formula ex(Formula f) ;  // E X f
Formula ax(Formula f);   // A X f
Formula ef(Formula f);
Formula ag(Formula f);
Formula eg(Formula f);

/// Left folds; the empty conjunction is true and the empty disjunction false.
Formula conj_all(const std::vector<Formula>& fs);
Formula disj_all(const std::vector<Formula>& fs);

/// Nested existential quantifiers, first name outermost.
Formula exists_all(const std::vector<std::string>& props, Formula f);
Formula forall_all(const std::vector<std::string>& props, Formula f);

Formula with_pos(Formula f, SourcePos pos);

bool equal(const Formula& a, const Formula& b);
std::size_t size(const Formula& f);
bool is_state_formula(const Formula& f);
bool has_quantifiers(const Formula& f);
int quantifier_depth(const Formula& f);

/// Propositions occurring free (not under a binder of the same name).
std::set<std::string> free_props(const Formula& f);
/// Every proposition name occurring, bound or free.
std::set<std::string> all_props(const Formula& f);

/// A reserved name (`#` prefix) not occurring in `f`.
std::string fresh_prop(const Formula& f);

/// Unique immediate successor: EX f & forall P. (EX (f & P) -> AX (f -> P)).
Formula ex1(const Formula& f);

Formula parse(std::string_view text);
std::string print(const Formula& f);

}  // namespace qctl

}  // namespace atlsc
