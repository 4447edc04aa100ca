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

#include "atlsc/strategy_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "atlsc/error.hpp"
#include "history_graph.hpp"

namespace atlsc {

std::size_t default_max_window_nodes() {
  if (const char* env = std::getenv("ATLSC_MAX_WINDOW_NODES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 20;
}

namespace {

using NodeId = detail::HistoryGraph::NodeId;
using Ctx = std::vector<std::int32_t>;  // agent -> table id, -1 when unassigned
using atl::Kind;

/// A path formula with its maximal state subformulas replaced by `#s<i>`.
struct PathPlan {
  std::vector<atl::Formula> subs;
  std::unique_ptr<LtlTableau> negated;  // tableau of the negation
  std::vector<std::size_t> order;       // tableau atom -> index into subs
};

struct QuantPlan {
  std::vector<AgentId> agents;
  std::vector<char> in_coalition;  // per agent
  std::vector<char> stable;        // per agent: untouched by nested quantifiers and relax
  unsigned window = 0;             // 0 for memoryless tables
};

/// A decision point: one window of one coalition member.
struct Slot {
  std::size_t member;
  ClassWindow key;
};

constexpr std::size_t kMemoLimit = std::size_t{1} << 22;

class Engine {
 public:
  Engine(const Cgso& game, unsigned k, bool memoryless_only, const DirectOptions& options)
      : game_(game),
        k_(k),
        memoryless_only_(memoryless_only),
        options_(options),
        graph_(game, k, options.max_window_nodes) {
    matters_.resize(game.num_agents());
    for (AgentId a = 0; a < game.num_agents(); ++a)
      for (ClassId c = 0; c < game.observation(a).num_classes(); ++c)
        matters_[a].push_back(class_matters(game, a, c));
  }

  DirectResult run(StateId q0, const atl::Formula& f) {
    const StateId start[] = {q0};
    const NodeId root = graph_.intern(start);
    DirectResult out;
    out.verdict = eval(f, root, Ctx(game_.num_agents(), -1), true);
    if (out.verdict) out.witnesses = std::move(witnesses_);
    stats_.history_nodes = graph_.size();
    out.stats = stats_;
    return out;
  }

 private:
  bool eval(const atl::Formula& f, NodeId u, const Ctx& ctx, bool record) {
    switch (f->kind) {
      case Kind::True:
        return true;
      case Kind::False:
        return false;
      case Kind::Prop:
        return game_.labels[graph_.state(u)].count(f->prop) > 0;
      case Kind::Not:
        return !eval(f->child(), u, ctx, false);
      case Kind::And:
        return eval(f->child(0), u, ctx, record) && eval(f->child(1), u, ctx, record);
      case Kind::Or:
        return eval(f->child(0), u, ctx, record) || eval(f->child(1), u, ctx, record);
      case Kind::Implies:
        return !eval(f->child(0), u, ctx, false) || eval(f->child(1), u, ctx, record);
      case Kind::Relax: {
        Ctx inner = ctx;
        for (AgentId a : resolve(f->coalition)) inner[a] = -1;
        return eval(f->child(), u, inner, record);
      }
      case Kind::StratQ:
        return eval_strat(f, u, ctx, record);
      case Kind::StratQCo:
      case Kind::RelaxCo:
        throw Error(ErrorKind::ComplementPresent, "complement operators must be eliminated first");
      case Kind::Next:
      case Kind::Until:
        break;
    }
    throw Error(ErrorKind::Stratification, "temporal operator where a state formula is required");
  }

  std::vector<AgentId> resolve(const Coalition& c) {
    std::vector<AgentId> out;
    for (const auto& name : c) {
      auto a = game_.find_agent(name);
      if (!a) throw Error(ErrorKind::UnknownAgent, "unknown agent '" + name + "'");
      out.push_back(*a);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const QuantPlan& quant_plan(const atl::Formula& f) {
    auto it = quants_.find(f.get());
    if (it != quants_.end()) return it->second;
    QuantPlan plan;
    plan.agents = resolve(f->coalition);
    plan.in_coalition.assign(game_.num_agents(), 0);
    for (AgentId a : plan.agents) plan.in_coalition[a] = 1;
    plan.stable.assign(game_.num_agents(), 1);
    for (const auto& name : atl::agents_of(f->child()))
      if (auto a = game_.find_agent(name)) plan.stable[*a] = 0;
    if (f->mode == StrategyMode::Memoryful && !plan.agents.empty()) {
      if (memoryless_only_)
        throw Error(ErrorKind::MemoryfulQuantifier,
                    "memoryful quantifier in a memoryless check; use the windowed engine");
      plan.window = k_;
    }
    return quants_.emplace(f.get(), std::move(plan)).first->second;
  }

  std::string memo_key(const atl::Node* f, NodeId u, const Ctx& ctx) const {
    std::string key(reinterpret_cast<const char*>(&f), sizeof f);
    key.append(reinterpret_cast<const char*>(&u), sizeof u);
    key.append(reinterpret_cast<const char*>(ctx.data()), ctx.size() * sizeof(std::int32_t));
    return key;
  }

  bool eval_strat(const atl::Formula& f, NodeId u, const Ctx& ctx, bool record) {
    const QuantPlan& plan = quant_plan(f);
    Ctx base = ctx;
    for (AgentId a : plan.agents) base[a] = -1;
    const std::string key = memo_key(f.get(), u, base);
    if (!record) {
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        ++stats_.memo_hits;
        return it->second;
      }
    }
    bool result;
    if (plan.agents.empty()) {
      result = all_outcomes(f->child(), u, base);
    } else {
      std::vector<std::map<ClassWindow, MoveId>> partial(plan.agents.size());
      result = search(f, plan, u, base, partial, record);
    }
    if (memo_.size() > kMemoLimit) memo_.clear();
    memo_[key] = result;
    return result;
  }

  std::size_t memory_of(const QuantPlan& plan) const { return plan.window == 0 ? 1 : plan.window; }

  /// Successor nodes of `x` where the agents in `fixed` play the given moves.
  template <typename Visit>
  void expand(NodeId x, const std::vector<std::pair<AgentId, MoveId>>& fixed, Visit&& visit) {
    const auto& vectors = graph_.vectors();
    for (std::size_t v = 0; v < vectors.size(); ++v) {
      bool ok = true;
      for (const auto& [agent, move] : fixed)
        if (vectors[v][agent] != move) {
          ok = false;
          break;
        }
      if (ok) visit(graph_.step(x, v));
    }
  }

  /// Explores the histories from `u` on which the quantified tables can be
  /// consulted: stable agents follow their (partial) tables, all others play
  /// anything. Returns the first undecided window of a stable member, or
  /// fills `open` with the windows of unstable members in discovery order.
  std::optional<Slot> explore(const QuantPlan& plan, NodeId u, const Ctx& base,
                              const std::vector<std::map<ClassWindow, MoveId>>& partial,
                              std::vector<Slot>& open) {
    open.clear();
    std::vector<std::map<ClassWindow, char>> seen_open(plan.agents.size());
    std::unordered_map<NodeId, char> seen{{u, 1}};
    std::deque<NodeId> todo{u};
    std::vector<std::pair<AgentId, MoveId>> fixed;
    while (!todo.empty()) {
      const NodeId x = todo.front();
      todo.pop_front();
      fixed.clear();
      for (std::size_t i = 0; i < plan.agents.size(); ++i) {
        const AgentId a = plan.agents[i];
        ClassWindow key = graph_.class_window(x, a, memory_of(plan));
        if (!matters_[a][key.back()]) continue;
        if (plan.stable[a]) {
          auto it = partial[i].find(key);
          if (it == partial[i].end()) return Slot{i, std::move(key)};
          fixed.emplace_back(a, it->second);
        } else if (seen_open[i].emplace(key, 1).second) {
          open.push_back({i, std::move(key)});
        }
      }
      for (AgentId c = 0; c < game_.num_agents(); ++c)
        if (!plan.in_coalition[c] && base[c] >= 0 && plan.stable[c])
          fixed.emplace_back(c, table_move(game_, tables_[base[c]], graph_.window(x)));
      expand(x, fixed, [&](NodeId t) {
        if (seen.emplace(t, 1).second) todo.push_back(t);
      });
    }
    return std::nullopt;
  }

  bool search(const atl::Formula& f, const QuantPlan& plan, NodeId u, const Ctx& base,
              std::vector<std::map<ClassWindow, MoveId>>& partial, bool record) {
    ++stats_.search_nodes;
    std::vector<Slot> open;
    if (auto slot = explore(plan, u, base, partial, open)) {
      for (MoveId m = 0; m < game_.num_moves(); ++m) {
        partial[slot->member][slot->key] = m;
        if (search(f, plan, u, base, partial, record)) return true;
      }
      partial[slot->member].erase(slot->key);
      return false;
    }
    // Odometer over the open windows, first window most significant.
    std::vector<MoveId> digits(open.size(), 0);
    while (true) {
      if (++stats_.tables > options_.max_tables)
        throw Error(ErrorKind::ResourceLimit, "strategy enumeration exceeds the table cap");
      Ctx inner = base;
      std::vector<std::int32_t> ids;
      for (std::size_t i = 0; i < plan.agents.size(); ++i) {
        StrategyTable t{plan.agents[i], plan.window, partial[i]};
        for (std::size_t j = 0; j < open.size(); ++j)
          if (open[j].member == i) t.moves[open[j].key] = digits[j];
        ids.push_back(intern(std::move(t)));
        inner[plan.agents[i]] = ids.back();
      }
      if (all_outcomes(f->child(), u, inner)) {
        if (record)
          for (auto id : ids) witnesses_.push_back(tables_[id]);
        return true;
      }
      std::size_t j = open.size();
      while (j > 0 && digits[j - 1] + 1 == game_.num_moves()) digits[--j] = 0;
      if (j == 0) return false;
      ++digits[j - 1];
    }
  }

  std::int32_t intern(StrategyTable t) {
    auto [it, fresh] = table_ids_.emplace(t, static_cast<std::int32_t>(tables_.size()));
    if (fresh) tables_.push_back(std::move(t));
    return it->second;
  }

  const PathPlan& path_plan(const atl::Formula& psi) {
    auto it = paths_.find(psi.get());
    if (it != paths_.end()) return it->second;
    PathPlan plan;
    std::map<std::string, std::size_t> index;
    auto abstract = [&](auto&& self, const atl::Formula& f) -> qctl::Formula {
      if (f->kind == Kind::True) return qctl::tt();
      if (f->kind == Kind::False) return qctl::ff();
      if (atl::is_state_formula(f)) {
        auto [slot, fresh] = index.emplace(atl::print(f), plan.subs.size());
        if (fresh) plan.subs.push_back(f);
        return qctl::prop("#s" + std::to_string(slot->second));
      }
      switch (f->kind) {
        case Kind::Not: return qctl::neg(self(self, f->child()));
        case Kind::And: return qctl::conj(self(self, f->child(0)), self(self, f->child(1)));
        case Kind::Or: return qctl::disj(self(self, f->child(0)), self(self, f->child(1)));
        case Kind::Implies: return qctl::implies(self(self, f->child(0)), self(self, f->child(1)));
        case Kind::Next: return qctl::next(self(self, f->child()));
        case Kind::Until: return qctl::until(self(self, f->child(0)), self(self, f->child(1)));
        default: break;
      }
      throw Error(ErrorKind::Stratification, "malformed path formula");
    };
    plan.negated = std::make_unique<LtlTableau>(qctl::neg(abstract(abstract, psi)));
    for (const auto& name : plan.negated->atoms()) plan.order.push_back(std::stoul(name.substr(2)));
    return paths_.emplace(psi.get(), std::move(plan)).first->second;
  }

  /// Every outcome from `u` under `ctx` satisfies `psi` at the current position.
  bool all_outcomes(const atl::Formula& psi, NodeId u, const Ctx& ctx) {
    ++stats_.outcome_checks;
    if (atl::is_state_formula(psi)) return eval(psi, u, ctx, false);
    const PathPlan& plan = path_plan(psi);

    std::unordered_map<NodeId, StateId> local{{u, 0}};
    std::vector<NodeId> nodes{u};
    std::vector<std::vector<StateId>> succ;
    std::vector<std::pair<AgentId, MoveId>> fixed;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const NodeId x = nodes[i];
      fixed.clear();
      for (AgentId c = 0; c < game_.num_agents(); ++c)
        if (ctx[c] >= 0) fixed.emplace_back(c, table_move(game_, tables_[ctx[c]], graph_.window(x)));
      std::vector<StateId> out;
      expand(x, fixed, [&](NodeId t) {
        auto [it, fresh] = local.emplace(t, static_cast<StateId>(nodes.size()));
        if (fresh) nodes.push_back(t);
        out.push_back(it->second);
      });
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      succ.push_back(std::move(out));
    }

    std::vector<StateSet> sets(plan.subs.size(), StateSet(nodes.size()));
    for (std::size_t s = 0; s < plan.subs.size(); ++s)
      for (std::size_t i = 0; i < nodes.size(); ++i)
        if (eval(plan.subs[s], nodes[i], ctx, false)) sets[s].set(i);
    std::vector<const StateSet*> atoms;
    for (std::size_t s : plan.order) atoms.push_back(&sets[s]);
    StateSet from(nodes.size());
    from.set(0);
    return !plan.negated->exists(succ, atoms, from, &stats_.ltl).test(0);
  }

  const Cgso& game_;
  unsigned k_;
  bool memoryless_only_;
  DirectOptions options_;
  detail::HistoryGraph graph_;
  DirectStats stats_;
  std::vector<std::vector<char>> matters_;  // agent -> class -> move can matter
  std::vector<StrategyTable> tables_;
  std::map<StrategyTable, std::int32_t> table_ids_;
  std::unordered_map<std::string, bool> memo_;
  std::map<const atl::Node*, QuantPlan> quants_;
  std::map<const atl::Node*, PathPlan> paths_;
  std::vector<StrategyTable> witnesses_;
};

atl::Formula prepare(const Cgso& game, StateId q0, const atl::Formula& f) {
  require_valid(game);
  if (q0 >= game.num_states()) throw Error(ErrorKind::UnknownState, "state index out of range");
  if (!atl::is_state_formula(f))
    throw Error(ErrorKind::Stratification, "the checked formula must be a state formula");
  for (const auto& p : atl::props_of(f))
    if (std::find(game.props.begin(), game.props.end(), p) == game.props.end())
      throw Error(ErrorKind::UnknownProp, "proposition '" + p + "' is not declared by the game");
  return atl::eliminate_complements(f, game.agents);
}

CheckReport to_report(const Cgso& game, const DirectResult& r, std::string engine) {
  CheckReport rep;
  rep.verdict = r.verdict;
  rep.engine = std::move(engine);
  for (const auto& t : r.witnesses)
    for (auto& line : format_strategy(game, t)) rep.witnesses.push_back(std::move(line));
  rep.stats["history_nodes"] = r.stats.history_nodes;
  rep.stats["search_nodes"] = r.stats.search_nodes;
  rep.stats["tables"] = r.stats.tables;
  rep.stats["outcome_checks"] = r.stats.outcome_checks;
  rep.stats["memo_hits"] = r.stats.memo_hits;
  rep.stats["product_states"] = r.stats.ltl.product_states;
  return rep;
}

}  // namespace

DirectResult decide_memoryless(const Cgso& game, StateId q0, const atl::Formula& f,
                               const DirectOptions& options) {
  const atl::Formula g = prepare(game, q0, f);
  if (atl::has_mode(g, StrategyMode::Memoryful))
    throw Error(ErrorKind::MemoryfulQuantifier,
                "memoryful quantifier in a memoryless check; use the windowed engine");
  Engine engine(game, 1, true, options);
  return engine.run(q0, g);
}

DirectResult decide_windowed(const Cgso& game, StateId q0, const atl::Formula& f, unsigned k,
                             const DirectOptions& options) {
  if (k == 0) throw Error(ErrorKind::EngineMismatch, "window length must be at least 1");
  const atl::Formula g = prepare(game, q0, f);
  Engine engine(game, k, false, options);
  return engine.run(q0, g);
}

CheckReport check_memoryless(const Cgso& game, StateId q0, const atl::Formula& f,
                             const DirectOptions& options) {
  return to_report(game, decide_memoryless(game, q0, f, options), "memoryless-direct");
}

CheckReport check_windowed(const Cgso& game, StateId q0, const atl::Formula& f, unsigned k,
                           const DirectOptions& options) {
  return to_report(game, decide_windowed(game, q0, f, k, options),
                   "windowed(" + std::to_string(k) + ")");
}

}  // namespace atlsc
