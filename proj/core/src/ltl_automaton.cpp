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

#include "atlsc/ltl_automaton.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <unordered_map>
#include <string>

#include "atlsc/error.hpp"

namespace atlsc {

StateSet reachable(const std::vector<std::vector<StateId>>& successors, const StateSet& from) {
  StateSet seen = from;
  std::vector<std::size_t> stack = from.to_vector();
  while (!stack.empty()) {
    const std::size_t q = stack.back();
    stack.pop_back();
    for (StateId t : successors[q])
      if (!seen.test(t)) {
        seen.set(t);
        stack.push_back(t);
      }
  }
  return seen;
}

StateSet pre_exists(const std::vector<std::vector<StateId>>& successors, const StateSet& target) {
  StateSet out(successors.size());
  for (std::size_t q = 0; q < successors.size(); ++q)
    for (StateId t : successors[q])
      if (target.test(t)) {
        out.set(q);
        break;
      }
  return out;
}

StateSet exists_until(const std::vector<std::vector<StateId>>& successors, const StateSet& hold,
                      const StateSet& target) {
  const std::size_t n = successors.size();
  std::vector<std::vector<StateId>> pred(n);
  for (std::size_t q = 0; q < n; ++q)
    for (StateId t : successors[q]) pred[t].push_back(static_cast<StateId>(q));
  StateSet out = target;
  std::vector<std::size_t> stack = target.to_vector();
  while (!stack.empty()) {
    const std::size_t q = stack.back();
    stack.pop_back();
    for (StateId p : pred[q])
      if (!out.test(p) && hold.test(p)) {
        out.set(p);
        stack.push_back(p);
      }
  }
  return out;
}

StateSet exists_always(const std::vector<std::vector<StateId>>& successors, const StateSet& hold) {
  // Greatest fixpoint: repeatedly drop states without a successor inside.
  const std::size_t n = successors.size();
  StateSet cur = hold;
  std::vector<std::vector<StateId>> pred(n);
  std::vector<std::size_t> live(n, 0);
  for (std::size_t q = 0; q < n; ++q)
    for (StateId t : successors[q]) {
      pred[t].push_back(static_cast<StateId>(q));
      if (hold.test(t)) ++live[q];
    }
  std::vector<std::size_t> stack;
  cur.for_each([&](std::size_t q) {
    if (live[q] == 0) stack.push_back(q);
  });
  for (std::size_t q : stack) cur.reset(q);
  while (!stack.empty()) {
    const std::size_t q = stack.back();
    stack.pop_back();
    for (StateId p : pred[q]) {
      if (!cur.test(p)) continue;
      if (--live[p] == 0) {
        cur.reset(p);
        stack.push_back(p);
      }
    }
  }
  return cur;
}

namespace {

enum class CKind { True, False, Atom, Not, And, Or, Implies, Next, Until };

struct CNode {
  CKind kind;
  std::uint32_t a = 0, b = 0;  // child indices
  std::uint32_t atom = 0;      // index into the atom table
  std::uint32_t elem = 0;      // Next/Until: index of the X-elementary
};

/// Per atom valuation: for every elementary set s', the set it requires of
/// its predecessor, its acceptance membership and whether the root holds,
/// plus the sets s' grouped by requirement.
struct StateTable {
  std::vector<std::uint32_t> req;
  std::vector<std::uint32_t> acc;
  std::vector<char> root;
  std::vector<std::uint32_t> bucket_start;
  std::vector<std::uint32_t> bucket;
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept {
    std::size_t h = k.size();
    for (auto w : k) h = (h ^ w) * 0x100000001B3ull;
    return h;
  }
};

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kTableCacheLimit = std::size_t{1} << 24;

}  // namespace

/// Closure of the formula with structurally equal subformulas merged.
struct LtlTableau::Impl {
  std::vector<CNode> nodes;  // children precede parents
  std::vector<std::string> atoms;
  std::vector<std::uint32_t> elem_target;  // node whose next-step value the elementary asserts
  std::vector<std::uint32_t> untils;       // Until node indices, acceptance order
  std::uint32_t root = 0;

  std::map<std::string, std::uint32_t> index;
  std::map<std::string, std::uint32_t> atom_index;
  std::map<std::uint32_t, std::uint32_t> elem_of_target;

  std::unordered_map<std::vector<std::uint64_t>, StateTable, KeyHash> tables;
  std::size_t cached_entries = 0;

  std::uint32_t intern(CNode n, const std::string& key) {
    auto [it, fresh] = index.emplace(key, static_cast<std::uint32_t>(nodes.size()));
    if (fresh) nodes.push_back(n);
    return it->second;
  }

  std::uint32_t elementary(std::uint32_t target) {
    auto [it, fresh] =
        elem_of_target.emplace(target, static_cast<std::uint32_t>(elem_target.size()));
    if (fresh) elem_target.push_back(target);
    return it->second;
  }

  std::uint32_t build(const qctl::Formula& f) {
    using K = qctl::Kind;
    auto key2 = [](char c, std::uint32_t a, std::uint32_t b) {
      return std::string(1, c) + std::to_string(a) + "," + std::to_string(b);
    };
    switch (f->kind) {
      case K::True:
        return intern({CKind::True}, "T");
      case K::False:
        return intern({CKind::False}, "F");
      case K::Prop: {
        auto [it, fresh] = atom_index.emplace(f->prop, static_cast<std::uint32_t>(atoms.size()));
        if (fresh) atoms.push_back(f->prop);
        CNode n{CKind::Atom};
        n.atom = it->second;
        return intern(n, "p" + std::to_string(n.atom));
      }
      case K::Not: {
        CNode n{CKind::Not};
        n.a = build(f->child());
        return intern(n, key2('!', n.a, 0));
      }
      case K::And:
      case K::Or:
      case K::Implies: {
        CNode n{f->kind == K::And ? CKind::And : f->kind == K::Or ? CKind::Or : CKind::Implies};
        n.a = build(f->child(0));
        n.b = build(f->child(1));
        return intern(n, key2(f->kind == K::And ? '&' : f->kind == K::Or ? '|' : '>', n.a, n.b));
      }
      case K::Next: {
        CNode n{CKind::Next};
        n.a = build(f->child());
        const std::string key = key2('X', n.a, 0);
        const bool fresh = !index.count(key);
        const std::uint32_t id = intern(n, key);
        if (fresh) nodes[id].elem = elementary(n.a);
        return id;
      }
      case K::Until: {
        CNode n{CKind::Until};
        n.a = build(f->child(0));
        n.b = build(f->child(1));
        const std::string key = key2('U', n.a, n.b);
        const bool fresh = !index.count(key);
        const std::uint32_t id = intern(n, key);
        if (fresh) {
          nodes[id].elem = elementary(id);
          untils.push_back(id);
        }
        return id;
      }
      default:
        throw Error(ErrorKind::EngineMismatch,
                    "linear-time check received a state quantifier; abstract it first");
    }
  }

  /// Truth values of all closure nodes under an atom valuation and elementary set s.
  void sat(const std::vector<std::uint64_t>& val, std::uint64_t s, std::vector<char>& v) const {
    v.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const CNode& n = nodes[i];
      switch (n.kind) {
        case CKind::True: v[i] = 1; break;
        case CKind::False: v[i] = 0; break;
        case CKind::Atom: v[i] = (val[n.atom >> 6] >> (n.atom & 63)) & 1u; break;
        case CKind::Not: v[i] = !v[n.a]; break;
        case CKind::And: v[i] = v[n.a] && v[n.b]; break;
        case CKind::Or: v[i] = v[n.a] || v[n.b]; break;
        case CKind::Implies: v[i] = !v[n.a] || v[n.b]; break;
        case CKind::Next: v[i] = (s >> n.elem) & 1u; break;
        case CKind::Until: v[i] = v[n.b] || (v[n.a] && ((s >> n.elem) & 1u)); break;
      }
    }
  }

  const StateTable& table(const std::vector<std::uint64_t>& val) {
    auto it = tables.find(val);
    if (it != tables.end()) return it->second;
    const std::size_t n = elem_target.size();
    const std::size_t m = untils.size();
    const std::size_t sets = std::size_t{1} << n;
    if (cached_entries + sets > kTableCacheLimit) {
      tables.clear();
      cached_entries = 0;
    }
    StateTable t;
    t.req.resize(sets);
    t.acc.resize(sets);
    t.root.resize(sets);
    std::vector<char> v;
    for (std::uint64_t s = 0; s < sets; ++s) {
      sat(val, s, v);
      std::uint32_t r = 0;
      for (std::size_t e = 0; e < n; ++e)
        if (v[elem_target[e]]) r |= std::uint32_t{1} << e;
      std::uint32_t a = 0;
      for (std::size_t u = 0; u < m; ++u)
        if (!v[untils[u]] || v[nodes[untils[u]].b]) a |= std::uint32_t{1} << u;
      t.req[s] = r;
      t.acc[s] = a;
      t.root[s] = v[root];
    }
    t.bucket_start.assign(sets + 1, 0);
    for (std::size_t s = 0; s < sets; ++s) ++t.bucket_start[t.req[s] + 1];
    for (std::size_t i = 0; i < sets; ++i) t.bucket_start[i + 1] += t.bucket_start[i];
    t.bucket.resize(sets);
    std::vector<std::uint32_t> fill(t.bucket_start.begin(), t.bucket_start.end() - 1);
    for (std::size_t s = 0; s < sets; ++s) t.bucket[fill[t.req[s]]++] = static_cast<std::uint32_t>(s);
    cached_entries += sets;
    return tables.emplace(val, std::move(t)).first->second;
  }
};

LtlTableau::LtlTableau(const qctl::Formula& psi) : impl_(std::make_unique<Impl>()) {
  impl_->root = impl_->build(psi);
  if (impl_->elem_target.size() > 30 || impl_->untils.size() > 32)
    throw Error(ErrorKind::ResourceLimit, "linear-time formula has too many temporal subformulas");
}
LtlTableau::~LtlTableau() = default;

const std::vector<std::string>& LtlTableau::atoms() const { return impl_->atoms; }
std::size_t LtlTableau::elementaries() const { return impl_->elem_target.size(); }
std::size_t LtlTableau::acceptance_sets() const { return impl_->untils.size(); }

StateSet LtlTableau::exists(const std::vector<std::vector<StateId>>& successors,
                            const std::vector<const StateSet*>& atom_sets, const StateSet& from,
                            LtlStats* stats, std::size_t max_product) {
  Impl& cl = *impl_;
  const std::size_t n = cl.elem_target.size();
  const std::size_t m = cl.untils.size();
  const std::size_t counters = std::max<std::size_t>(m, 1);
  const std::size_t nq = successors.size();
  const std::size_t sets = std::size_t{1} << n;

  const StateSet reach = reachable(successors, from);
  if (reach.count() * sets * counters > max_product)
    throw Error(ErrorKind::ResourceLimit,
                "linear-time tableau too large: " + std::to_string(n) + " elementary formulas over " +
                    std::to_string(reach.count()) + " states");
  if (stats) {
    ++stats->checks;
    stats->elementaries = std::max(stats->elementaries, n);
  }

  std::vector<std::uint32_t> compact(nq, kUnseen);
  std::vector<const StateTable*> tables;
  std::vector<std::uint64_t> val((cl.atoms.size() + 63) / 64);
  reach.for_each([&](std::size_t q) {
    std::fill(val.begin(), val.end(), 0);
    for (std::size_t i = 0; i < cl.atoms.size(); ++i)
      if (atom_sets[i]->test(q)) val[i >> 6] |= std::uint64_t{1} << (i & 63);
    compact[q] = static_cast<std::uint32_t>(tables.size());
    tables.push_back(&cl.table(val));
  });

  // Explore the degeneralized product from the initial nodes.
  const std::size_t dense = tables.size() * sets * counters;
  std::vector<std::uint32_t> id_of(dense, kUnseen);
  struct PNode {
    std::uint32_t q;
    std::uint32_t s;
    std::uint32_t c;
  };
  std::vector<PNode> nodes;
  std::vector<std::uint32_t> edge_start{0};
  std::vector<std::uint32_t> edges;
  auto visit = [&](std::uint32_t q, std::uint32_t s, std::uint32_t c) {
    const std::size_t k = (static_cast<std::size_t>(compact[q]) * sets + s) * counters + c;
    if (id_of[k] == kUnseen) {
      id_of[k] = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back({q, s, c});
    }
    return id_of[k];
  };

  std::vector<std::pair<std::uint32_t, std::uint32_t>> initial;  // (state, node)
  from.for_each([&](std::size_t q) {
    const StateTable& t = *tables[compact[q]];
    for (std::uint32_t s = 0; s < sets; ++s)
      if (t.root[s]) initial.emplace_back(static_cast<std::uint32_t>(q), visit(static_cast<std::uint32_t>(q), s, 0));
  });

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const PNode p = nodes[i];
    const StateTable& t = *tables[compact[p.q]];
    std::uint32_t c = 0;
    if (m > 0) c = ((t.acc[p.s] >> p.c) & 1u) ? static_cast<std::uint32_t>((p.c + 1) % m) : p.c;
    for (StateId q2 : successors[p.q]) {
      const StateTable& t2 = *tables[compact[q2]];
      for (std::uint32_t b = t2.bucket_start[p.s]; b < t2.bucket_start[p.s + 1]; ++b)
        edges.push_back(visit(q2, t2.bucket[b], c));
    }
    edge_start.push_back(static_cast<std::uint32_t>(edges.size()));
  }
  const std::size_t total = nodes.size();
  if (stats) stats->product_states += total;

  auto accepting = [&](std::size_t i) {
    const PNode& p = nodes[i];
    if (p.c != 0) return false;
    return m == 0 || (tables[compact[p.q]]->acc[p.s] & 1u);
  };

  // Iterative Tarjan; mark nodes of nontrivial SCCs holding an accepting node.
  std::vector<std::uint32_t> index(total, kUnseen), low(total, 0);
  std::vector<char> on_stack(total, 0), good(total, 0);
  std::vector<std::uint32_t> scc_stack;
  struct Frame {
    std::uint32_t v;
    std::uint32_t next;
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0;
  for (std::uint32_t root = 0; root < total; ++root) {
    if (index[root] != kUnseen) continue;
    call.push_back({root, edge_start[root]});
    index[root] = low[root] = counter++;
    scc_stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < edge_start[f.v + 1]) {
        const std::uint32_t w = edges[f.next++];
        if (index[w] == kUnseen) {
          index[w] = low[w] = counter++;
          scc_stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, edge_start[w]});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::uint32_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] != index[v]) continue;
      const std::size_t base = scc_stack.size();
      std::size_t first = base;
      do {
        --first;
      } while (scc_stack[first] != v);
      bool nontrivial = base - first > 1;
      if (!nontrivial)
        for (std::uint32_t e = edge_start[v]; e < edge_start[v + 1]; ++e)
          if (edges[e] == v) nontrivial = true;
      bool fair = false;
      if (nontrivial)
        for (std::size_t i = first; i < base && !fair; ++i) fair = accepting(scc_stack[i]);
      for (std::size_t i = first; i < base; ++i) {
        on_stack[scc_stack[i]] = 0;
        if (fair) good[scc_stack[i]] = 1;
      }
      scc_stack.resize(first);
    }
  }

  // Backward closure of the accepting SCCs, as a fixpoint over forward edges
  // in reverse discovery order.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = total; i-- > 0;) {
      if (good[i]) continue;
      for (std::uint32_t e = edge_start[i]; e < edge_start[i + 1]; ++e)
        if (good[edges[e]]) {
          good[i] = 1;
          changed = true;
          break;
        }
    }
  }

  StateSet out(nq);
  for (const auto& [q, id] : initial)
    if (good[id]) out.set(q);
  return out;
}

StateSet ltl_exists(const std::vector<std::vector<StateId>>& successors, const qctl::Formula& psi,
                    const AtomLookup& atom, const StateSet& from, LtlStats* stats,
                    std::size_t max_product) {
  LtlTableau tableau(psi);
  std::vector<const StateSet*> sets;
  for (const auto& name : tableau.atoms()) sets.push_back(&atom(name));
  return tableau.exists(successors, sets, from, stats, max_product);
}

}  // namespace atlsc
