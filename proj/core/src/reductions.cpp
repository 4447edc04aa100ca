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

#include "atlsc/reductions.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "atlsc/atoms.hpp"
#include "atlsc/error.hpp"

namespace atlsc::reductions {
namespace {

namespace Q = qctl;

Coalition merge(const Coalition& a, const Coalition& b) {
  Coalition out = a;
  out.insert(out.end(), b.begin(), b.end());
  return make_coalition(std::move(out));
}

Coalition minus(const Coalition& a, const Coalition& b) {
  Coalition out;
  for (const auto& x : a)
    if (!std::binary_search(b.begin(), b.end(), x)) out.push_back(x);
  return out;
}

/// Distinct (moves of `agents`, successor) pairs leaving q, in vector order.
std::vector<std::pair<std::size_t, StateId>> restricted_edges(const Cgso& game, StateId q,
                                                              const std::vector<AgentId>& agents) {
  std::set<std::pair<std::vector<MoveId>, StateId>> seen;
  std::vector<std::pair<std::size_t, StateId>> out;
  for (std::size_t v = 0; v < game.num_move_vectors(); ++v) {
    const auto moves = game.decode_vector(v);
    std::vector<MoveId> part;
    for (AgentId a : agents) part.push_back(moves[a]);
    const StateId t = game.edge(q, v);
    if (seen.emplace(std::move(part), t).second) out.emplace_back(v, t);
  }
  return out;
}

std::vector<std::string> move_atoms(const Cgso& game, const std::vector<AgentId>& agents) {
  const FreshAtomRegistry reg(game);
  std::vector<std::string> out;
  for (AgentId a : agents)
    for (std::size_t j = 0; j < game.num_moves(); ++j) out.push_back(reg.move_atom(a, static_cast<MoveId>(j)));
  return out;
}

std::vector<std::string> level_atoms(const Cgso& game, unsigned level) {
  const FreshAtomRegistry reg(game);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < game.num_states(); ++i)
    out.push_back(reg.path_atom(static_cast<StateId>(i), level));
  return out;
}

Q::Formula exactly_one(const std::vector<Q::Formula>& atoms) {
  std::vector<Q::Formula> options;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    std::vector<Q::Formula> parts{atoms[j]};
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (k != j) parts.push_back(Q::neg(atoms[k]));
    options.push_back(Q::conj_all(parts));
  }
  return Q::disj_all(options);
}

Q::Formula agent_exactly_one(const Cgso& game, AgentId a) {
  const FreshAtomRegistry reg(game);
  std::vector<Q::Formula> atoms;
  for (std::size_t j = 0; j < game.num_moves(); ++j)
    atoms.push_back(Q::prop(reg.move_atom(a, static_cast<MoveId>(j))));
  return Q::ag(exactly_one(atoms));
}

void require_declared(const Cgso& game, const std::string& p) {
  if (std::find(game.props.begin(), game.props.end(), p) == game.props.end())
    throw Error(ErrorKind::UnknownProp, "unknown proposition '" + p + "'");
}

}  // namespace

std::vector<AgentId> resolve(const Cgso& game, const Coalition& c) {
  std::vector<AgentId> out;
  for (const auto& name : c) {
    const auto a = game.find_agent(name);
    if (!a) throw Error(ErrorKind::UnknownAgent, "unknown agent '" + name + "'");
    out.push_back(*a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Q::Formula move_profile(const Cgso& game, const std::vector<AgentId>& agents, std::size_t vector) {
  const FreshAtomRegistry reg(game);
  const auto moves = game.decode_vector(vector);
  std::vector<Q::Formula> parts;
  for (AgentId a : agents) parts.push_back(Q::prop(reg.move_atom(a, moves[a])));
  return Q::conj_all(parts);
}

// Tree semantics ---------------------------------------------------------------

Q::Formula phi_strat(const Cgso& game, const Coalition& A) {
  std::vector<Q::Formula> parts;
  for (AgentId a : resolve(game, A)) parts.push_back(agent_exactly_one(game, a));
  return Q::conj_all(parts);
}

Q::Formula phi_path(const Cgso& game, unsigned level) {
  const FreshAtomRegistry reg(game);
  const auto atoms = level_atoms(game, level);
  std::vector<Q::Formula> branches, any;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    std::vector<Q::Formula> parts{Q::prop(atoms[i]), Q::prop(reg.class_atom(static_cast<StateId>(i)))};
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (k != i) parts.push_back(Q::neg(Q::prop(atoms[k])));
    branches.push_back(Q::conj_all(parts));
    any.push_back(Q::prop(atoms[i]));
  }
  return Q::eg(Q::conj(Q::disj_all(branches), Q::ex1(Q::disj_all(any))));
}

Q::Formula phi_out(const Cgso& game, unsigned level, const Coalition& B) {
  const auto agents = resolve(game, B);
  const auto atoms = level_atoms(game, level);
  std::vector<Q::Formula> steps;
  for (std::size_t i = 0; i < game.num_states(); ++i)
    for (const auto& [v, t] : restricted_edges(game, static_cast<StateId>(i), agents)) {
      std::vector<Q::Formula> parts{Q::prop(atoms[i])};
      if (!agents.empty()) parts.push_back(move_profile(game, agents, v));
      parts.push_back(Q::ex(Q::prop(atoms[t])));
      steps.push_back(Q::conj_all(parts));
    }
  return Q::eg(Q::disj_all(steps));
}

Q::Formula translate_tree(const Cgso& game, const atl::Formula& f, const Coalition& B,
                          unsigned level) {
  using K = atl::Kind;
  auto rec = [&](const atl::Formula& g) { return translate_tree(game, g, B, level); };
  switch (f->kind) {
    case K::True:
      return Q::tt();
    case K::False:
      return Q::ff();
    case K::Prop: {
      require_declared(game, f->prop);
      const FreshAtomRegistry reg(game);
      std::vector<Q::Formula> holders;
      for (std::size_t i = 0; i < game.num_states(); ++i)
        if (game.labels[i].count(f->prop))
          holders.push_back(Q::prop(reg.path_atom(static_cast<StateId>(i), level)));
      return Q::disj_all(holders);
    }
    case K::Not:
      return Q::neg(rec(f->child()));
    case K::And:
      return Q::conj(rec(f->child(0)), rec(f->child(1)));
    case K::Or:
      return Q::disj(rec(f->child(0)), rec(f->child(1)));
    case K::Implies:
      return Q::implies(rec(f->child(0)), rec(f->child(1)));
    case K::Next:
      return Q::next(rec(f->child()));
    case K::Until:
      return Q::until(rec(f->child(0)), rec(f->child(1)));
    case K::Relax:
      resolve(game, f->coalition);
      return translate_tree(game, f->child(), minus(B, f->coalition), level);
    case K::StratQCo:
    case K::RelaxCo:
      throw Error(ErrorKind::ComplementPresent,
                  "complement operators must be eliminated before translation");
    case K::StratQ: {
      if (!f->coalition.empty() && f->mode == StrategyMode::Memoryless)
        throw Error(ErrorKind::MemorylessQuantifier,
                    "memoryless quantifier in a memoryful translation");
      const auto agents = resolve(game, f->coalition);
      const Coalition BA = merge(B, f->coalition);
      const unsigned next = level + 1;
      const auto cur = level_atoms(game, level);
      const auto nxt = level_atoms(game, next);
      std::vector<Q::Formula> start, on_branch;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        start.push_back(Q::conj(Q::prop(cur[i]), Q::prop(nxt[i])));
        on_branch.push_back(Q::prop(nxt[i]));
      }
      Q::Formula guard = Q::conj_all({phi_path(game, next), Q::disj_all(start), phi_out(game, next, BA)});
      Q::Formula goal = Q::apath(
          Q::implies(Q::always(Q::disj_all(on_branch)), translate_tree(game, f->child(), BA, next)));
      Q::Formula inner = Q::forall_all(nxt, Q::implies(guard, goal));
      if (agents.empty()) return inner;
      return Q::exists_all(move_atoms(game, agents), Q::conj(phi_strat(game, f->coalition), inner));
    }
  }
  throw Error(ErrorKind::Syntax, "unknown formula node");
}

Reduction build_uniform_reduction(const Cgso& game, StateId alpha, const atl::Formula& f) {
  require_valid(game);
  if (!is_uniform(game)) throw Error(ErrorKind::NotUniform, "tree reduction requires uniform observation");
  if (alpha >= game.num_states()) throw Error(ErrorKind::UnknownState, "state index out of range");
  if (atl::has_complements(f))
    throw Error(ErrorKind::ComplementPresent, "complement operators must be eliminated before translation");
  Reduction r;
  r.structure = quotient(game);
  const auto level0 = level_atoms(game, 0);
  r.structure.props.insert(r.structure.props.end(), level0.begin(), level0.end());
  const Q::Formula body = translate_tree(game, f, {}, 0);
  r.formula = Q::exists(level0[alpha], Q::conj(body, Q::prop(level0[alpha])));
  return r;
}

// Memoryless strategies --------------------------------------------------------

Q::Formula phi_stratm(const Cgso& game, const Coalition& A) {
  const FreshAtomRegistry reg(game);
  std::vector<Q::Formula> parts;
  for (AgentId a : resolve(game, A)) {
    parts.push_back(agent_exactly_one(game, a));
    const auto& part = game.observation(a);
    for (std::size_t c = 0; c < part.num_classes(); ++c) {
      const Q::Formula in_class = Q::prop(reg.obs_atom(a, static_cast<ClassId>(c)));
      for (std::size_t j = 0; j < game.num_moves(); ++j) {
        const Q::Formula m = Q::prop(reg.move_atom(a, static_cast<MoveId>(j)));
        parts.push_back(Q::implies(Q::ef(Q::conj(in_class, m)), Q::ag(Q::implies(in_class, m))));
      }
    }
  }
  return Q::conj_all(parts);
}

Q::Formula phi_out_memoryless(const Cgso& game, const Coalition& B) {
  const FreshAtomRegistry reg(game);
  const auto agents = resolve(game, B);
  std::vector<Q::Formula> per_state;
  for (std::size_t q = 0; q < game.num_states(); ++q) {
    std::vector<Q::Formula> steps;
    for (const auto& [v, t] : restricted_edges(game, static_cast<StateId>(q), agents)) {
      Q::Formula step = Q::next(Q::prop(reg.state_atom(t)));
      if (!agents.empty()) step = Q::conj(move_profile(game, agents, v), step);
      steps.push_back(step);
    }
    per_state.push_back(
        Q::implies(Q::prop(reg.state_atom(static_cast<StateId>(q))), Q::disj_all(steps)));
  }
  return Q::always(Q::conj_all(per_state));
}

Q::Formula translate_memoryless(const Cgso& game, const atl::Formula& f, const Coalition& B) {
  using K = atl::Kind;
  auto rec = [&](const atl::Formula& g) { return translate_memoryless(game, g, B); };
  switch (f->kind) {
    case K::True:
      return Q::tt();
    case K::False:
      return Q::ff();
    case K::Prop:
      require_declared(game, f->prop);
      return Q::prop(f->prop);
    case K::Not:
      return Q::neg(rec(f->child()));
    case K::And:
      return Q::conj(rec(f->child(0)), rec(f->child(1)));
    case K::Or:
      return Q::disj(rec(f->child(0)), rec(f->child(1)));
    case K::Implies:
      return Q::implies(rec(f->child(0)), rec(f->child(1)));
    case K::Next:
      return Q::next(rec(f->child()));
    case K::Until:
      return Q::until(rec(f->child(0)), rec(f->child(1)));
    case K::Relax:
      resolve(game, f->coalition);
      return translate_memoryless(game, f->child(), minus(B, f->coalition));
    case K::StratQCo:
    case K::RelaxCo:
      throw Error(ErrorKind::ComplementPresent,
                  "complement operators must be eliminated before translation");
    case K::StratQ: {
      if (!f->coalition.empty() && f->mode == StrategyMode::Memoryful)
        throw Error(ErrorKind::MemoryfulQuantifier,
                    "memoryful quantifier in a memoryless translation");
      const auto agents = resolve(game, f->coalition);
      const Coalition BA = merge(B, f->coalition);
      Q::Formula outcome = Q::apath(
          Q::implies(phi_out_memoryless(game, BA), translate_memoryless(game, f->child(), BA)));
      if (agents.empty()) return outcome;
      return Q::exists_all(move_atoms(game, agents),
                           Q::conj(phi_stratm(game, f->coalition), outcome));
    }
  }
  throw Error(ErrorKind::Syntax, "unknown formula node");
}

Reduction build_memoryless_reduction(const Cgso& game, const atl::Formula& f) {
  require_valid(game);
  if (atl::has_complements(f))
    throw Error(ErrorKind::ComplementPresent, "complement operators must be eliminated before translation");
  return {underlying_kripke(game), translate_memoryless(game, f, {})};
}

}  // namespace atlsc::reductions
