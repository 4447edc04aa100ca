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

#include "atlsc/formula.hpp"

#include <algorithm>
#include <utility>

#include "atlsc/error.hpp"

namespace atlsc {

Coalition make_coalition(std::vector<std::string> agents) {
  std::sort(agents.begin(), agents.end());
  agents.erase(std::unique(agents.begin(), agents.end()), agents.end());
  return agents;
}

namespace atl {
namespace {

Formula make(Kind kind, std::vector<Formula> children = {}) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children = std::move(children);
  return n;
}

Formula make_quant(Kind kind, Coalition c, StrategyMode mode, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->coalition = make_coalition(std::move(c));
  n->mode = mode;
  n->children = {std::move(f)};
  return n;
}

bool is_temporal(Kind k) { return k == Kind::Next || k == Kind::Until; }

bool check_state(const Formula& f, bool state) {
  switch (f->kind) {
    case Kind::Next:
    case Kind::Until:
      if (state) return false;
      break;
    case Kind::StratQ:
    case Kind::StratQCo:
      return check_state(f->child(), false);
    case Kind::Relax:
    case Kind::RelaxCo:
      return check_state(f->child(), true);
    default:
      break;
  }
  for (const auto& c : f->children)
    if (!check_state(c, state && !is_temporal(f->kind))) return false;
  return true;
}

}  // namespace

Formula tt() { return make(Kind::True); }
Formula ff() { return make(Kind::False); }
Formula prop(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prop;
  n->prop = std::move(name);
  return n;
}
Formula neg(Formula f) { return make(Kind::Not, {std::move(f)}); }
Formula conj(Formula a, Formula b) { return make(Kind::And, {std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return make(Kind::Or, {std::move(a), std::move(b)}); }
Formula implies(Formula a, Formula b) {
  return make(Kind::Implies, {std::move(a), std::move(b)});
}
Formula strat(Coalition c, StrategyMode mode, Formula f) {
  return make_quant(Kind::StratQ, std::move(c), mode, std::move(f));
}
Formula strat_co(Coalition c, StrategyMode mode, Formula f) {
  return make_quant(Kind::StratQCo, std::move(c), mode, std::move(f));
}
Formula relax(Coalition c, Formula f) {
  return make_quant(Kind::Relax, std::move(c), StrategyMode::Memoryful, std::move(f));
}
Formula relax_co(Coalition c, Formula f) {
  return make_quant(Kind::RelaxCo, std::move(c), StrategyMode::Memoryful, std::move(f));
}
Formula next(Formula f) { return make(Kind::Next, {std::move(f)}); }
Formula until(Formula a, Formula b) { return make(Kind::Until, {std::move(a), std::move(b)}); }

Formula eventually(Formula f) { return until(tt(), std::move(f)); }
Formula always(Formula f) { return neg(eventually(neg(std::move(f)))); }
Formula box(Coalition c, StrategyMode mode, Formula f) {
  return neg(strat(std::move(c), mode, neg(std::move(f))));
}
Formula all_paths(Formula f) {
  return relax_co({}, strat({}, StrategyMode::Memoryless, std::move(f)));
}
Formula some_path(Formula f) { return neg(all_paths(neg(std::move(f)))); }

Formula with_pos(Formula f, SourcePos pos) {
  auto n = std::make_shared<Node>(*f);
  n->pos = pos;
  return n;
}

bool equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->prop != b->prop || a->coalition != b->coalition ||
      a->children.size() != b->children.size())
    return false;
  if ((a->kind == Kind::StratQ || a->kind == Kind::StratQCo) && a->mode != b->mode)
    return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!equal(a->children[i], b->children[i])) return false;
  return true;
}

std::size_t size(const Formula& f) {
  std::size_t n = 1;
  for (const auto& c : f->children) n += size(c);
  return n;
}

bool is_state_formula(const Formula& f) { return check_state(f, true); }

int strat_depth(const Formula& f) {
  int d = 0;
  for (const auto& c : f->children) d = std::max(d, strat_depth(c));
  if (f->kind == Kind::StratQ || f->kind == Kind::StratQCo) ++d;
  return d;
}

int next_depth(const Formula& f) {
  int d = 0;
  for (const auto& c : f->children) d = std::max(d, next_depth(c));
  return f->kind == Kind::Next ? d + 1 : d;
}

bool has_complements(const Formula& f) {
  if (f->kind == Kind::StratQCo || f->kind == Kind::RelaxCo) return true;
  return std::any_of(f->children.begin(), f->children.end(),
                     [](const Formula& c) { return has_complements(c); });
}

bool has_mode(const Formula& f, StrategyMode mode) {
  if ((f->kind == Kind::StratQ || f->kind == Kind::StratQCo) && f->mode == mode &&
      !(f->kind == Kind::StratQ && f->coalition.empty()))
    return true;
  return std::any_of(f->children.begin(), f->children.end(),
                     [&](const Formula& c) { return has_mode(c, mode); });
}

std::set<std::string> agents_of(const Formula& f) {
  std::set<std::string> out(f->coalition.begin(), f->coalition.end());
  for (const auto& c : f->children) out.merge(agents_of(c));
  return out;
}

std::set<std::string> props_of(const Formula& f) {
  std::set<std::string> out;
  if (f->kind == Kind::Prop) out.insert(f->prop);
  for (const auto& c : f->children) out.merge(props_of(c));
  return out;
}

}  // namespace atl

namespace qctl {
namespace {

Formula make(Kind kind, std::vector<Formula> children = {}, std::string p = {}) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children = std::move(children);
  n->prop = std::move(p);
  return n;
}

Formula fold(const std::vector<Formula>& fs, Kind kind) {
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = make(kind, {acc, fs[i]});
  return acc;
}

bool check_state(const Formula& f, bool state) {
  switch (f->kind) {
    case Kind::Next:
    case Kind::Until:
      if (state) return false;
      for (const auto& c : f->children)
        if (!check_state(c, false)) return false;
      return true;
    case Kind::EPath:
    case Kind::APath:
      return check_state(f->child(), false);
    case Kind::Exists:
    case Kind::Forall:
      return check_state(f->child(), true);
    default:
      for (const auto& c : f->children)
        if (!check_state(c, state)) return false;
      return true;
  }
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (f->kind == Kind::Prop) {
    if (!bound.count(f->prop)) out.insert(f->prop);
    return;
  }
  if (f->kind == Kind::Exists || f->kind == Kind::Forall) {
    const bool fresh = bound.insert(f->prop).second;
    collect_free(f->child(), bound, out);
    if (fresh) bound.erase(f->prop);
    return;
  }
  for (const auto& c : f->children) collect_free(c, bound, out);
}

}  // namespace

Formula tt() { return make(Kind::True); }
Formula ff() { return make(Kind::False); }
Formula prop(std::string name) { return make(Kind::Prop, {}, std::move(name)); }
Formula neg(Formula f) { return make(Kind::Not, {std::move(f)}); }
Formula conj(Formula a, Formula b) { return make(Kind::And, {std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return make(Kind::Or, {std::move(a), std::move(b)}); }
Formula implies(Formula a, Formula b) {
  return make(Kind::Implies, {std::move(a), std::move(b)});
}
Formula exists(std::string p, Formula f) { return make(Kind::Exists, {std::move(f)}, std::move(p)); }
Formula forall(std::string p, Formula f) { return make(Kind::Forall, {std::move(f)}, std::move(p)); }
Formula epath(Formula f) { return make(Kind::EPath, {std::move(f)}); }
Formula apath(Formula f) { return make(Kind::APath, {std::move(f)}); }
Formula next(Formula f) { return make(Kind::Next, {std::move(f)}); }
Formula until(Formula a, Formula b) { return make(Kind::Until, {std::move(a), std::move(b)}); }

Formula eventually(Formula f) { return until(tt(), std::move(f)); }
Formula always(Formula f) { return neg(eventually(neg(std::move(f)))); }
Formula ex(Formula f) { return epath(next(std::move(f))); }
Formula ax(Formula f) { return apath(next(std::move(f))); }
Formula ef(Formula f) { return epath(eventually(std::move(f))); }
Formula ag(Formula f) { return apath(always(std::move(f))); }
Formula eg(Formula f) { return epath(always(std::move(f))); }

Formula conj_all(const std::vector<Formula>& fs) {
  return fs.empty() ? tt() : fold(fs, Kind::And);
}
Formula disj_all(const std::vector<Formula>& fs) {
  return fs.empty() ? ff() : fold(fs, Kind::Or);
}

Formula exists_all(const std::vector<std::string>& props, Formula f) {
  for (auto it = props.rbegin(); it != props.rend(); ++it) f = exists(*it, std::move(f));
  return f;
}
Formula forall_all(const std::vector<std::string>& props, Formula f) {
  for (auto it = props.rbegin(); it != props.rend(); ++it) f = forall(*it, std::move(f));
  return f;
}

Formula with_pos(Formula f, SourcePos pos) {
  auto n = std::make_shared<Node>(*f);
  n->pos = pos;
  return n;
}

bool equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->prop != b->prop || a->children.size() != b->children.size())
    return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!equal(a->children[i], b->children[i])) return false;
  return true;
}

std::size_t size(const Formula& f) {
  std::size_t n = 1;
  for (const auto& c : f->children) n += size(c);
  return n;
}

bool is_state_formula(const Formula& f) { return check_state(f, true); }

bool has_quantifiers(const Formula& f) { return quantifier_depth(f) > 0; }

int quantifier_depth(const Formula& f) {
  int d = 0;
  for (const auto& c : f->children) d = std::max(d, quantifier_depth(c));
  if (f->kind == Kind::Exists || f->kind == Kind::Forall) ++d;
  return d;
}

std::set<std::string> free_props(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_props(const Formula& f) {
  std::set<std::string> out;
  if (f->kind == Kind::Prop || f->kind == Kind::Exists || f->kind == Kind::Forall)
    out.insert(f->prop);
  for (const auto& c : f->children) out.merge(all_props(c));
  return out;
}

std::string fresh_prop(const Formula& f) {
  const auto used = all_props(f);
  for (std::size_t i = 0;; ++i) {
    std::string name = "#x" + std::to_string(i);
    if (!used.count(name)) return name;
  }
}

Formula ex1(const Formula& f) {
  const std::string p = fresh_prop(f);
  return conj(ex(f), forall(p, implies(ex(conj(f, prop(p))), ax(implies(f, prop(p))))));
}

}  // namespace qctl
}  // namespace atlsc
