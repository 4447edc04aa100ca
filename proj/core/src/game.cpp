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

#include "atlsc/game.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

#include "atlsc/atoms.hpp"
#include "atlsc/error.hpp"

namespace atlsc {

// ObservationPartition -------------------------------------------------------

ObservationPartition::ObservationPartition(std::size_t num_states,
                                           std::vector<std::vector<StateId>> classes)
    : class_of_(num_states, kNoClass) {
  classes_.reserve(classes.size());
  for (auto& cls : classes) {
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    const auto index = static_cast<ClassId>(classes_.size());
    for (StateId q : cls) {
      if (q >= num_states) continue;
      if (class_of_[q] == kNoClass)
        class_of_[q] = index;
      else
        duplicates_.push_back(q);
    }
    classes_.push_back(std::move(cls));
  }
}

ObservationPartition ObservationPartition::identity(std::size_t num_states) {
  std::vector<std::vector<StateId>> classes;
  for (std::size_t q = 0; q < num_states; ++q) classes.push_back({static_cast<StateId>(q)});
  return ObservationPartition(num_states, std::move(classes));
}

ObservationPartition ObservationPartition::single_class(std::size_t num_states) {
  std::vector<StateId> all(num_states);
  for (std::size_t q = 0; q < num_states; ++q) all[q] = static_cast<StateId>(q);
  return ObservationPartition(num_states, {std::move(all)});
}

bool ObservationPartition::same_family(const ObservationPartition& other) const {
  if (num_states() != other.num_states()) return false;
  auto sorted = [](std::vector<std::vector<StateId>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return sorted(classes_) == sorted(other.classes_);
}

// Cgso -----------------------------------------------------------------------

std::size_t Cgso::num_move_vectors() const noexcept {
  std::size_t n = 1;
  for (std::size_t i = 0; i < agents.size(); ++i) n *= moves.size();
  return n;
}

std::size_t Cgso::vector_index(std::span<const MoveId> moves_by_agent) const {
  std::size_t index = 0;
  for (MoveId m : moves_by_agent) index = index * moves.size() + m;
  return index;
}

std::vector<MoveId> Cgso::decode_vector(std::size_t index) const {
  std::vector<MoveId> v(agents.size());
  for (std::size_t i = agents.size(); i-- > 0;) {
    v[i] = static_cast<MoveId>(index % moves.size());
    index /= moves.size();
  }
  return v;
}

void Cgso::reset_edges() {
  edges.assign(states.size() * num_move_vectors(), kNoState);
}

std::vector<StateId> Cgso::successors(StateId q) const {
  std::vector<StateId> out;
  const std::size_t n = num_move_vectors();
  out.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    const StateId t = edge(q, v);
    if (t != kNoState) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

template <typename Names>
std::optional<std::uint32_t> find_name(const Names& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - names.begin());
}

std::string vector_text(const Cgso& g, std::size_t vector) {
  std::string s;
  for (MoveId m : g.decode_vector(vector)) {
    if (!s.empty()) s += ' ';
    s += g.moves[m];
  }
  return s;
}

}  // namespace

std::optional<StateId> Cgso::find_state(std::string_view name) const {
  return find_name(states, name);
}
std::optional<AgentId> Cgso::find_agent(std::string_view name) const {
  return find_name(agents, name);
}
std::optional<MoveId> Cgso::find_move(std::string_view name) const {
  return find_name(moves, name);
}

bool Cgso::has_label(StateId q, std::string_view prop) const {
  return labels.at(q).count(std::string(prop)) > 0;
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  const auto first = static_cast<unsigned char>(name.front());
  if (!std::isalpha(first) && first != '_' && first != '#') return false;
  for (char ch : name) {
    const auto c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && c != '_' && c != '#' && c != '@' && c != '~' && c != '\'')
      return false;
  }
  return true;
}

namespace {

bool is_keyword(std::string_view name) {
  static const char* const kKeywords[] = {"X",    "U",      "F",      "G",     "E",
                                          "A",    "true",   "false",  "exists",
                                          "forall", "relax", "keep",  "co"};
  for (const char* k : kKeywords)
    if (name == k) return true;
  return false;
}

}  // namespace

// validate -------------------------------------------------------------------

std::vector<Diagnostic> validate(const Cgso& g) {
  std::vector<Diagnostic> out;
  auto report = [&](std::string invariant, std::string message) {
    out.push_back({std::move(invariant), std::move(message)});
  };

  if (g.states.empty()) report("non-empty", "game has no states");
  if (g.agents.empty()) report("non-empty", "game has no agents");
  if (g.moves.empty()) report("non-empty", "game has no moves");

  auto check_names = [&](const std::vector<std::string>& names, const char* what,
                         bool identifier) {
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (!seen.insert(n).second) report("unique-names", std::string("duplicate ") + what + " '" + n + "'");
      if (atoms::is_reserved(n))
        report("reserved-name", std::string(what) + " '" + n + "' uses the reserved character '#'");
      else if (identifier && (!is_identifier(n) || is_keyword(n)))
        report("identifier", std::string(what) + " '" + n + "' is not a valid identifier");
    }
  };
  check_names(g.states, "state", true);
  check_names(g.props, "proposition", true);
  check_names(g.agents, "agent", true);
  check_names(g.moves, "move", false);

  if (g.labels.size() != g.num_states()) {
    report("labels", "label table size does not match the number of states");
  } else {
    for (std::size_t q = 0; q < g.num_states(); ++q)
      for (const auto& p : g.labels[q])
        if (std::find(g.props.begin(), g.props.end(), p) == g.props.end())
          report("labels", "state '" + g.states[q] + "' is labeled with undeclared proposition '" + p + "'");
  }

  if (g.states.empty() || g.agents.empty() || g.moves.empty()) return out;

  const std::size_t nv = g.num_move_vectors();
  if (g.edges.size() != g.num_states() * nv) {
    report("totality", "transition table has the wrong size");
  } else {
    for (std::size_t q = 0; q < g.num_states(); ++q) {
      for (std::size_t v = 0; v < nv; ++v) {
        const StateId t = g.edge(static_cast<StateId>(q), v);
        if (t == kNoState)
          report("totality", "no transition from '" + g.states[q] + "' on move vector (" + vector_text(g, v) + ")");
        else if (t >= g.num_states())
          report("edge-target", "transition from '" + g.states[q] + "' on (" + vector_text(g, v) + ") targets an undeclared state");
      }
    }
  }

  if (g.observations.size() != g.num_agents()) {
    report("partition", "expected one observation partition per agent");
  } else {
    for (std::size_t a = 0; a < g.num_agents(); ++a) {
      const auto& part = g.observations[a];
      if (part.num_states() != g.num_states()) {
        report("partition", "observation of agent '" + g.agents[a] + "' is sized for a different state set");
        continue;
      }
      for (const auto& cls : part.classes()) {
        if (cls.empty()) report("partition", "observation of agent '" + g.agents[a] + "' has an empty class");
        for (StateId q : cls)
          if (q >= g.num_states())
            report("partition", "observation of agent '" + g.agents[a] + "' mentions an undeclared state");
      }
      for (StateId q : part.duplicates())
        report("partition", "state '" + g.states[q] + "' appears in two classes of agent '" + g.agents[a] + "'");
      for (std::size_t q = 0; q < g.num_states(); ++q)
        if (part.class_of(static_cast<StateId>(q)) == kNoClass)
          report("partition", "observation of agent '" + g.agents[a] + "' does not cover state '" + g.states[q] + "'");
    }
  }

  if (g.owner) {
    const auto& own = *g.owner;
    if (own.size() != g.num_states()) {
      report("turn-based", "owner table size does not match the number of states");
    } else if (g.edges.size() == g.num_states() * nv) {
      for (std::size_t q = 0; q < g.num_states(); ++q) {
        const AgentId o = own[q];
        if (o >= g.num_agents()) {
          report("turn-based", "owner of '" + g.states[q] + "' is not a declared agent");
          continue;
        }
        // Edg(q, m) must be a function of m[o] alone.
        std::vector<StateId> by_move(g.num_moves(), kNoState);
        for (std::size_t v = 0; v < nv; ++v) {
          const StateId t = g.edge(static_cast<StateId>(q), v);
          if (t == kNoState) continue;
          const MoveId m = g.decode_vector(v)[o];
          if (by_move[m] == kNoState) {
            by_move[m] = t;
          } else if (by_move[m] != t) {
            report("turn-based", "successor of '" + g.states[q] + "' depends on agents other than its owner '" + g.agents[o] + "'");
            break;
          }
        }
      }
    }
  }

  if (g.init && *g.init >= g.num_states()) report("init", "initial state is not declared");
  return out;
}

void require_valid(const Cgso& game) {
  const auto diags = validate(game);
  if (!diags.empty())
    throw Error(ErrorKind::InvalidGame, diags.front().invariant + ": " + diags.front().message);
}

bool is_uniform(const Cgso& game) {
  for (std::size_t a = 1; a < game.num_agents(); ++a)
    if (!game.observations[a].same_family(game.observations[0])) return false;
  return true;
}

// Derived structures ---------------------------------------------------------

KripkeStructure quotient(const Cgso& game) {
  if (!is_uniform(game)) throw Error(ErrorKind::NotUniform, "quotient requires uniform observation");
  const FreshAtomRegistry reg(game);
  const auto& part = game.observations.at(0);
  KripkeStructure k;
  for (std::size_t q = 0; q < game.num_states(); ++q)
    k.props.push_back(reg.class_atom(static_cast<StateId>(q)));
  for (std::size_t c = 0; c < part.num_classes(); ++c) {
    std::set<std::string> label;
    for (StateId q : part.classes()[c]) label.insert(reg.class_atom(q));
    k.add_state("C" + std::to_string(c), std::move(label));
  }
  for (std::size_t c = 0; c < k.size(); ++c)
    for (std::size_t d = 0; d < k.size(); ++d)
      k.add_transition(static_cast<StateId>(c), static_cast<StateId>(d));
  if (game.init) k.init = part.class_of(*game.init);
  return k;
}

KripkeStructure underlying_kripke(const Cgso& game) {
  const FreshAtomRegistry reg(game);
  KripkeStructure k;
  k.props = game.props;
  for (std::size_t q = 0; q < game.num_states(); ++q)
    k.props.push_back(reg.state_atom(static_cast<StateId>(q)));
  for (std::size_t a = 0; a < game.num_agents(); ++a)
    for (std::size_t c = 0; c < game.observations[a].num_classes(); ++c)
      k.props.push_back(reg.obs_atom(static_cast<AgentId>(a), static_cast<ClassId>(c)));

  for (std::size_t q = 0; q < game.num_states(); ++q) {
    const auto sq = static_cast<StateId>(q);
    std::set<std::string> label = game.labels[q];
    label.insert(reg.state_atom(sq));
    for (std::size_t a = 0; a < game.num_agents(); ++a)
      label.insert(reg.obs_atom(static_cast<AgentId>(a), game.observations[a].class_of(sq)));
    k.add_state(game.states[q], std::move(label));
  }
  for (std::size_t q = 0; q < game.num_states(); ++q)
    for (StateId t : game.successors(static_cast<StateId>(q)))
      k.add_transition(static_cast<StateId>(q), t);
  k.init = game.init;
  return k;
}

Cgso to_turn_based(const Cgso& game) {
  std::vector<AgentId> order(game.num_agents());
  for (std::size_t a = 0; a < order.size(); ++a) order[a] = static_cast<AgentId>(a);
  return to_turn_based(game, order);
}

Cgso to_turn_based(const Cgso& game, std::span<const AgentId> order) {
  const std::size_t p = game.num_agents();
  const std::size_t r = game.num_moves();
  {
    std::vector<AgentId> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    bool ok = sorted.size() == p;
    for (std::size_t i = 0; ok && i < p; ++i) ok = sorted[i] == i;
    if (!ok) throw Error(ErrorKind::UnknownAgent, "agent order must be a permutation of the game's agents");
  }
  if (std::find(game.props.begin(), game.props.end(), atoms::kMid) != game.props.end())
    throw Error(ErrorKind::InvalidGame, "proposition 'mid' is reserved for the turn-based transformation");

  Cgso tb;
  tb.agents = game.agents;
  tb.moves = game.moves;
  tb.props = game.props;
  if (p > 1) tb.props.emplace_back(atoms::kMid);
  tb.states = game.states;
  tb.labels = game.labels;
  std::vector<AgentId> owner(game.num_states(), order.empty() ? 0 : order[0]);

  // Intermediate (q, v) for every proper non-empty prefix v, grouped by depth.
  // prefix_state[depth][q * r^depth + code(v)]
  std::vector<std::vector<StateId>> prefix_state(p);
  std::size_t width = 1;
  for (std::size_t depth = 1; depth < p; ++depth) {
    width *= r;
    prefix_state[depth].resize(game.num_states() * width);
    for (std::size_t q = 0; q < game.num_states(); ++q) {
      for (std::size_t code = 0; code < width; ++code) {
        std::string name = game.states[q];
        std::size_t rest = code;
        std::vector<MoveId> prefix(depth);
        for (std::size_t i = depth; i-- > 0;) {
          prefix[i] = static_cast<MoveId>(rest % r);
          rest /= r;
        }
        for (MoveId m : prefix) name += "~" + game.moves[m];
        if (game.find_state(name))
          throw Error(ErrorKind::InvalidGame, "intermediate state name '" + name + "' collides with a game state");
        prefix_state[depth][q * width + code] = static_cast<StateId>(tb.states.size());
        tb.states.push_back(std::move(name));
        tb.labels.push_back({std::string(atoms::kMid)});
        owner.push_back(order[depth]);
      }
    }
  }

  tb.reset_edges();
  const std::size_t nv = tb.num_move_vectors();
  for (std::size_t q = 0; q < game.num_states(); ++q) {
    // Walk every prefix; at depth d the owner order[d] extends it.
    std::size_t depth_width = 1;
    for (std::size_t depth = 0; depth < p; ++depth) {
      for (std::size_t code = 0; code < depth_width; ++code) {
        const StateId here = depth == 0 ? static_cast<StateId>(q) : prefix_state[depth][q * depth_width + code];
        for (std::size_t v = 0; v < nv; ++v) {
          const MoveId m = tb.decode_vector(v)[order[depth]];
          StateId target;
          if (depth + 1 < p) {
            target = prefix_state[depth + 1][q * depth_width * r + code * r + m];
          } else {
            // Decode the full prefix (in agent order) into a game move vector.
            std::vector<MoveId> full(p);
            std::size_t rest = code;
            for (std::size_t i = depth; i-- > 0;) {
              full[order[i]] = static_cast<MoveId>(rest % r);
              rest /= r;
            }
            full[order[depth]] = m;
            target = game.edge(static_cast<StateId>(q), full);
          }
          tb.set_edge(here, v, target);
        }
      }
      depth_width *= r;
    }
  }

  // Original classes per agent, then one shared class per micro-depth.
  for (std::size_t a = 0; a < p; ++a) {
    std::vector<std::vector<StateId>> classes = game.observations[a].classes();
    for (std::size_t depth = 1; depth < p; ++depth)
      classes.emplace_back(prefix_state[depth].begin(), prefix_state[depth].end());
    tb.observations.emplace_back(tb.num_states(), std::move(classes));
  }
  tb.owner = std::move(owner);
  tb.init = game.init;
  return tb;
}

// Paths ----------------------------------------------------------------------

bool is_path(const Cgso& game, std::span<const StateId> path) {
  if (path.empty()) return false;
  for (StateId q : path)
    if (q >= game.num_states()) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto succ = game.successors(path[i]);
    if (!std::binary_search(succ.begin(), succ.end(), path[i + 1])) return false;
  }
  return true;
}

bool path_equivalent(const Cgso& game, AgentId agent, std::span<const StateId> lhs,
                     std::span<const StateId> rhs) {
  if (!is_path(game, lhs) || !is_path(game, rhs))
    throw Error(ErrorKind::InvalidPath, "argument is not a finite path of the game");
  if (lhs.size() != rhs.size()) return false;
  const auto& part = game.observation(agent);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (!part.equivalent(lhs[i], rhs[i])) return false;
  return true;
}

bool move_matters(const Cgso& game, AgentId agent, StateId q) {
  const std::size_t nv = game.num_move_vectors();
  for (std::size_t v = 0; v < nv; ++v) {
    auto vec = game.decode_vector(v);
    if (vec[agent] != 0) continue;
    const StateId base = game.edge(q, v);
    for (MoveId m = 1; m < game.num_moves(); ++m) {
      vec[agent] = m;
      if (game.edge(q, vec) != base) return true;
    }
  }
  return false;
}

std::vector<bool> reachable_from(const Cgso& game, StateId from) {
  std::vector<bool> seen(game.num_states(), false);
  std::deque<StateId> todo{from};
  seen[from] = true;
  while (!todo.empty()) {
    const StateId q = todo.front();
    todo.pop_front();
    for (StateId t : game.successors(q))
      if (!seen[t]) {
        seen[t] = true;
        todo.push_back(t);
      }
  }
  return seen;
}

}  // namespace atlsc
