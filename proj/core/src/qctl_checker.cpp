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

#include "atlsc/qctl_checker.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>

#include "atlsc/error.hpp"

namespace atlsc {

int default_max_quantifier_depth() {
  if (const char* env = std::getenv("ATLSC_MAX_QUANT_DEPTH")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 8;
}

namespace {

using qctl::Formula;
using qctl::Kind;

int block_depth(const Formula& f, Kind parent) {
  const bool quant = f->kind == Kind::Exists || f->kind == Kind::Forall;
  int d = 0;
  for (const auto& c : f->children) d = std::max(d, block_depth(c, quant ? f->kind : Kind::True));
  if (quant && parent != f->kind) ++d;
  return d;
}

Formula negate(const Formula& f) {
  return f->kind == Kind::Not ? f->child() : qctl::neg(f);
}

struct Binding {
  StateSet assigned;
  StateSet value;
};

struct MemoKey {
  const qctl::Node* node;
  std::vector<std::uint64_t> fingerprint;
  bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    std::size_t h = std::hash<const void*>{}(k.node);
    for (auto w : k.fingerprint) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001B3ull;
    return h;
  }
};

struct MemoEntry {
  Truth truth;
  StateSet covered;
};

enum class Fast { None, Atom, NotAtom, Next, NotNext, Until, NotUntil };

/// A path formula with its maximal state subformulas replaced by atoms.
struct PathInfo {
  Formula root;  // keeps synthesized nodes alive
  Formula ltl;
  std::vector<std::pair<Formula, bool>> atoms;  // subformula, positive occurrence
  std::map<std::string, std::size_t> atom_index;
  Fast fast = Fast::None;
  std::shared_ptr<LtlTableau> tableau;      // built on first general check
  std::vector<std::size_t> tableau_order;  // tableau atom -> index into atoms
};

struct BlockInfo {
  std::vector<std::string> props;
  Formula body;
  bool universal = false;
};

constexpr std::size_t kMemoLimit = 1u << 21;

}  // namespace

struct QctlChecker::Impl {
  const KripkeStructure& k;
  QctlOptions options;
  QctlStats stats;
  std::size_t n;
  std::unordered_map<std::string, StateSet> labels;
  std::unordered_map<std::string, std::deque<Binding>> bound;
  std::unordered_map<const qctl::Node*, std::vector<std::string>> free_cache;
  std::map<std::pair<const qctl::Node*, bool>, PathInfo> path_cache;
  std::unordered_map<const qctl::Node*, BlockInfo> block_cache;
  std::unordered_map<MemoKey, MemoEntry, MemoKeyHash> memo;

  const qctl::Node* witness_node = nullptr;
  StateId witness_state = 0;
  std::vector<Valuation> witness;

  Impl(const KripkeStructure& kripke, QctlOptions opts)
      : k(kripke), options(opts), n(kripke.size()) {
    const auto problems = k.check();
    if (!problems.empty()) throw Error(ErrorKind::InvalidGame, problems.front());
    for (const auto& p : k.props) labels.emplace(p, StateSet(n));
    for (std::size_t q = 0; q < n; ++q)
      for (const auto& p : k.labels[q]) {
        auto it = labels.find(p);
        if (it == labels.end()) it = labels.emplace(p, StateSet(n)).first;
        it->second.set(q);
      }
  }

  void validate(const Formula& f) {
    if (!qctl::is_state_formula(f))
      throw Error(ErrorKind::Stratification, "QCTL* query must be a state formula");
    for (const auto& p : qctl::free_props(f))
      if (!labels.count(p)) throw Error(ErrorKind::UnknownProp, "unknown proposition '" + p + "'");
    const int depth = block_depth(f, Kind::True);
    if (depth > options.max_quantifier_depth)
      throw Error(ErrorKind::ResourceLimit,
                  "quantifier nesting " + std::to_string(depth) + " exceeds the limit of " +
                      std::to_string(options.max_quantifier_depth));
  }

  const std::vector<std::string>& free_of(const Formula& f) {
    auto it = free_cache.find(f.get());
    if (it != free_cache.end()) return it->second;
    const auto s = qctl::free_props(f);
    return free_cache.emplace(f.get(), std::vector<std::string>(s.begin(), s.end())).first->second;
  }

  /// Fingerprint of the free quantified props; nullopt if one is partial.
  bool fingerprint(const Formula& f, std::vector<std::uint64_t>& out) {
    out.clear();
    for (const auto& p : free_of(f)) {
      auto it = bound.find(p);
      if (it == bound.end() || it->second.empty()) {
        out.push_back(0);
        continue;
      }
      const Binding& b = it->second.back();
      if (b.assigned.count() != n) return false;
      out.push_back(1);
      out.insert(out.end(), b.value.words().begin(), b.value.words().end());
    }
    return true;
  }

  Truth unknown() const { return {StateSet(n), StateSet::full(n)}; }
  Truth exact(StateSet s) const { return {s, s}; }

  Truth eval(const Formula& f, const StateSet& demand) {
    ++stats.evaluations;
    if (f->kind == Kind::True || f->kind == Kind::False || f->kind == Kind::Prop)
      return compute(f, demand, true);
    std::vector<std::uint64_t> fp;
    const bool is_exact = fingerprint(f, fp);
    if (!is_exact) return compute(f, demand, false);
    MemoKey key{f.get(), std::move(fp)};
    auto it = memo.find(key);
    StateSet want = demand;
    if (it != memo.end()) {
      if (demand.subset_of(it->second.covered)) {
        ++stats.memo_hits;
        return it->second.truth;
      }
      want |= it->second.covered;
    }
    Truth t = compute(f, want, true);
    if (memo.size() > kMemoLimit) memo.clear();
    memo[std::move(key)] = {t, want};
    return t;
  }

  Truth compute(const Formula& f, const StateSet& demand, bool inputs_exact) {
    switch (f->kind) {
      case Kind::True:
        return exact(StateSet::full(n));
      case Kind::False:
        return exact(StateSet(n));
      case Kind::Prop: {
        auto it = bound.find(f->prop);
        if (it != bound.end() && !it->second.empty()) {
          const Binding& b = it->second.back();
          return {b.value & b.assigned, b.value | b.assigned.complement()};
        }
        auto lit = labels.find(f->prop);
        if (lit == labels.end())
          throw Error(ErrorKind::UnknownProp, "unknown proposition '" + f->prop + "'");
        return exact(lit->second);
      }
      case Kind::Not: {
        Truth t = eval(f->child(), demand);
        return {t.hi.complement(), t.lo.complement()};
      }
      case Kind::And: {
        Truth a = eval(f->child(0), demand);
        Truth b = eval(f->child(1), demand);
        return {a.lo & b.lo, a.hi & b.hi};
      }
      case Kind::Or: {
        Truth a = eval(f->child(0), demand);
        Truth b = eval(f->child(1), demand);
        return {a.lo | b.lo, a.hi | b.hi};
      }
      case Kind::Implies: {
        Truth a = eval(f->child(0), demand);
        Truth b = eval(f->child(1), demand);
        return {a.hi.complement() | b.lo, a.lo.complement() | b.hi};
      }
      case Kind::EPath:
        return eval_path(f, false, demand);
      case Kind::APath: {
        Truth t = eval_path(f, true, demand);
        return {t.hi.complement(), t.lo.complement()};
      }
      case Kind::Exists:
      case Kind::Forall:
        if (!inputs_exact) return unknown();
        return eval_block(f, demand);
      case Kind::Next:
      case Kind::Until:
        break;
    }
    throw Error(ErrorKind::Stratification, "temporal operator outside a path quantifier");
  }

  // Path quantifiers -----------------------------------------------------------

  Formula abstract(const Formula& f, bool positive, PathInfo& info) {
    if (qctl::is_state_formula(f)) {
      const std::string key = (positive ? "+" : "-") + qctl::print(f);
      auto [it, fresh] = info.atom_index.emplace(key, info.atoms.size());
      if (fresh) info.atoms.emplace_back(f, positive);
      return qctl::prop("#a" + std::to_string(it->second));
    }
    switch (f->kind) {
      case Kind::Not:
        return qctl::neg(abstract(f->child(), !positive, info));
      case Kind::And:
        return qctl::conj(abstract(f->child(0), positive, info), abstract(f->child(1), positive, info));
      case Kind::Or:
        return qctl::disj(abstract(f->child(0), positive, info), abstract(f->child(1), positive, info));
      case Kind::Implies:
        return qctl::implies(abstract(f->child(0), !positive, info),
                             abstract(f->child(1), positive, info));
      case Kind::Next:
        return qctl::next(abstract(f->child(), positive, info));
      case Kind::Until:
        return qctl::until(abstract(f->child(0), positive, info),
                           abstract(f->child(1), positive, info));
      default:
        throw Error(ErrorKind::Stratification, "unexpected state operator in path position");
    }
  }

  static Fast classify(const Formula& g) {
    auto atom = [](const Formula& x) { return x->kind == Kind::Prop; };
    if (atom(g)) return Fast::Atom;
    if (g->kind == Kind::Next && atom(g->child())) return Fast::Next;
    if (g->kind == Kind::Until && atom(g->child(0)) && atom(g->child(1))) return Fast::Until;
    if (g->kind == Kind::Not) {
      const auto& h = g->child();
      if (atom(h)) return Fast::NotAtom;
      if (h->kind == Kind::Next && atom(h->child())) return Fast::NotNext;
      if (h->kind == Kind::Until && atom(h->child(0)) && atom(h->child(1))) return Fast::NotUntil;
    }
    return Fast::None;
  }

  PathInfo& path_info(const Formula& f, bool negated) {
    auto key = std::make_pair(f.get(), negated);
    auto it = path_cache.find(key);
    if (it != path_cache.end()) return it->second;
    PathInfo info;
    info.root = negated ? negate(f->child()) : f->child();
    info.ltl = abstract(info.root, true, info);
    info.fast = classify(info.ltl);
    return path_cache.emplace(key, std::move(info)).first->second;
  }

  StateSet solve(PathInfo& info, const std::vector<StateSet>& atoms, const StateSet& demand) {
    const auto& succ = k.successors;
    auto at = [&](const Formula& leaf) -> const StateSet& {
      return atoms[std::stoul(leaf->prop.substr(2))];
    };
    const Formula& g = info.ltl;
    switch (info.fast) {
      case Fast::Atom:
        return at(g);
      case Fast::NotAtom:
        return at(g->child()).complement();
      case Fast::Next:
        return pre_exists(succ, at(g->child()));
      case Fast::NotNext:
        return pre_exists(succ, at(g->child()->child()).complement());
      case Fast::Until:
        return exists_until(succ, at(g->child(0)), at(g->child(1)));
      case Fast::NotUntil: {
        const StateSet nb = at(g->child()->child(1)).complement();
        const StateSet na = at(g->child()->child(0)).complement();
        return exists_until(succ, nb, nb & na) | exists_always(succ, nb);
      }
      case Fast::None:
        break;
    }
    if (!info.tableau) {
      info.tableau = std::make_shared<LtlTableau>(g);
      for (const auto& name : info.tableau->atoms())
        info.tableau_order.push_back(std::stoul(name.substr(2)));
    }
    std::vector<const StateSet*> sets;
    sets.reserve(info.tableau_order.size());
    for (std::size_t i : info.tableau_order) sets.push_back(&atoms[i]);
    return info.tableau->exists(succ, sets, demand, &stats.ltl, options.max_product);
  }

  Truth eval_path(const Formula& f, bool negated, const StateSet& demand) {
    PathInfo& info = path_info(f, negated);
    const StateSet reach = reachable(k.successors, demand);
    std::vector<Truth> vals;
    vals.reserve(info.atoms.size());
    bool all_exact = true;
    for (const auto& [sub, positive] : info.atoms) {
      vals.push_back(eval(sub, reach));
      if (((vals.back().hi - vals.back().lo) & reach).any()) all_exact = false;
    }
    auto pick = [&](bool lower) {
      std::vector<StateSet> sets;
      sets.reserve(vals.size());
      for (std::size_t i = 0; i < vals.size(); ++i)
        sets.push_back(lower == info.atoms[i].second ? vals[i].lo : vals[i].hi);
      return sets;
    };
    if (all_exact) return exact(solve(info, pick(true), reach));
    if (info.fast == Fast::None) return unknown();
    return {solve(info, pick(true), reach), solve(info, pick(false), reach)};
  }

  // Quantifier blocks ----------------------------------------------------------

  const BlockInfo& block_info(const Formula& f) {
    auto it = block_cache.find(f.get());
    if (it != block_cache.end()) return it->second;
    BlockInfo info;
    info.universal = f->kind == Kind::Forall;
    Formula cur = f;
    while (cur->kind == f->kind &&
           std::find(info.props.begin(), info.props.end(), cur->prop) == info.props.end()) {
      info.props.push_back(cur->prop);
      cur = cur->child();
    }
    info.body = info.universal ? negate(cur) : cur;
    return block_cache.emplace(f.get(), std::move(info)).first->second;
  }

  Truth eval_block(const Formula& f, const StateSet& demand) {
    const BlockInfo& info = block_info(f);
    const StateSet reach = reachable(k.successors, demand);
    const std::size_t m = info.props.size();
    std::vector<std::size_t> states = reach.to_vector();

    for (const auto& p : info.props) bound[p].push_back({reach.complement(), StateSet(n)});
    std::vector<Binding*> slots;
    for (const auto& p : info.props) slots.push_back(&bound[p].back());

    const bool want_witness = witness_node == f.get() && demand.test(witness_state);
    StateSet found(n);
    StateSet remaining = demand;
    const std::size_t vars = states.size() * m;

    auto dfs = [&](auto&& self, std::size_t idx) -> void {
      if (remaining.none()) return;
      ++stats.search_nodes;
      Truth t = eval(info.body, remaining);
      const StateSet fresh = t.lo & remaining;
      if (fresh.any()) {
        if (want_witness && fresh.test(witness_state)) record_witness(info, slots);
        found |= fresh;
        remaining -= fresh;
      }
      if (!t.hi.intersects(remaining) || idx == vars) return;
      Binding& b = *slots[idx % m];
      const std::size_t q = states[idx / m];
      b.assigned.set(q);
      self(self, idx + 1);
      if (remaining.none()) {
        b.assigned.reset(q);
        return;
      }
      b.value.set(q);
      self(self, idx + 1);
      b.value.reset(q);
      b.assigned.reset(q);
    };
    dfs(dfs, 0);

    for (const auto& p : info.props) {
      auto& stack = bound[p];
      stack.pop_back();
      if (stack.empty()) bound.erase(p);
    }
    // Exact on the demanded states, unknown elsewhere.
    Truth t{found, found | demand.complement()};
    if (info.universal) return {t.hi.complement(), t.lo.complement()};
    return t;
  }

  void record_witness(const BlockInfo& info, const std::vector<Binding*>& slots) {
    if (!witness.empty()) return;
    for (std::size_t j = 0; j < info.props.size(); ++j) {
      Valuation v{info.props[j], {}};
      slots[j]->value.for_each([&](std::size_t q) { v.states.push_back(static_cast<StateId>(q)); });
      witness.push_back(std::move(v));
    }
  }
};

QctlChecker::QctlChecker(const KripkeStructure& k, QctlOptions options)
    : impl_(std::make_unique<Impl>(k, options)) {}
QctlChecker::~QctlChecker() = default;

bool QctlChecker::check(StateId q, const qctl::Formula& f) {
  if (q >= impl_->n) throw Error(ErrorKind::UnknownState, "state index out of range");
  impl_->validate(f);
  impl_->witness.clear();
  impl_->witness_node = f->kind == Kind::Exists ? f.get() : nullptr;
  impl_->witness_state = q;
  StateSet demand(impl_->n);
  demand.set(q);
  const Truth t = impl_->eval(f, demand);
  const bool verdict = t.lo.test(q);
  if (!verdict) impl_->witness.clear();
  impl_->witness_node = nullptr;
  return verdict;
}

StateSet QctlChecker::satisfying_states(const qctl::Formula& f) {
  impl_->validate(f);
  const StateSet all = StateSet::full(impl_->n);
  return impl_->eval(f, all).lo;
}

const std::vector<Valuation>& QctlChecker::witness() const { return impl_->witness; }
const QctlStats& QctlChecker::stats() const { return impl_->stats; }

bool check_structure(const KripkeStructure& k, StateId q, const qctl::Formula& f) {
  QctlChecker checker(k);
  return checker.check(q, f);
}

bool check_ctlstar(const KripkeStructure& k, StateId q, const qctl::Formula& f) {
  if (qctl::has_quantifiers(f))
    throw Error(ErrorKind::EngineMismatch, "CTL* check received a quantified formula");
  return check_structure(k, q, f);
}

int quantifier_block_depth(const qctl::Formula& f) { return block_depth(f, Kind::True); }

}  // namespace atlsc
