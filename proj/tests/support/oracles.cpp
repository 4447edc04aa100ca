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

#include "oracles.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atlsc::testing {
namespace {

using qctl::Kind;

struct Eval {
  const KripkeStructure& k;
  std::size_t max_lasso;
  std::vector<std::pair<std::string, std::uint64_t>> env;  // innermost last
  std::map<std::string, bool> memo;

  bool holds(const std::string& p, StateId q) const {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == p) return (it->second >> q) & 1u;
    return k.has_label(q, p);
  }

  std::string key(const qctl::Node* f, StateId q) const {
    std::string s = std::to_string(reinterpret_cast<std::uintptr_t>(f)) + ":" + std::to_string(q);
    for (const auto& [p, v] : env) s += "|" + p + "=" + std::to_string(v);
    return s;
  }

  bool state(const qctl::Formula& f, StateId q) {
    switch (f->kind) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Prop: return holds(f->prop, q);
      case Kind::Not: return !state(f->child(), q);
      case Kind::And: return state(f->child(0), q) && state(f->child(1), q);
      case Kind::Or: return state(f->child(0), q) || state(f->child(1), q);
      case Kind::Implies: return !state(f->child(0), q) || state(f->child(1), q);
      case Kind::Exists:
      case Kind::Forall: {
        const bool want = f->kind == Kind::Exists;
        const std::uint64_t all = std::uint64_t{1} << k.size();
        for (std::uint64_t mask = 0; mask < all; ++mask) {
          env.emplace_back(f->prop, mask);
          const bool v = state(f->child(), q);
          env.pop_back();
          if (v == want) return want;
        }
        return !want;
      }
      case Kind::EPath:
      case Kind::APath: {
        const std::string k_ = key(f.get(), q);
        auto it = memo.find(k_);
        if (it != memo.end()) return it->second;
        const bool some = exists_lasso(f->child(), q, f->kind == Kind::APath);
        const bool v = f->kind == Kind::EPath ? some : !some;
        memo[k_] = v;
        return v;
      }
      case Kind::Next:
      case Kind::Until: break;
    }
    throw std::logic_error("path operator in state position");
  }

  /// Some lasso from q satisfies psi (or, when `negate`, violates it).
  bool exists_lasso(const qctl::Formula& psi, StateId q, bool negate) {
    std::vector<StateId> path{q};
    auto dfs = [&](auto&& self) -> bool {
      const StateId last = path.back();
      for (StateId t : k.successors[last]) {
        for (std::size_t l = 0; l < path.size(); ++l)
          if (path[l] == t && on_lasso(psi, path, l) != negate) return true;
      }
      if (path.size() >= max_lasso) return false;
      for (StateId t : k.successors[last]) {
        path.push_back(t);
        const bool found = self(self);
        path.pop_back();
        if (found) return true;
      }
      return false;
    };
    return dfs(dfs);
  }

  bool on_lasso(const qctl::Formula& psi, const std::vector<StateId>& path, std::size_t loop) {
    return values(psi, path, loop)[0];
  }

  std::vector<char> values(const qctl::Formula& f, const std::vector<StateId>& path,
                           std::size_t loop) {
    const std::size_t m = path.size();
    auto succ = [&](std::size_t i) { return i + 1 < m ? i + 1 : loop; };
    std::vector<char> v(m, 0);
    if (qctl::is_state_formula(f)) {
      for (std::size_t i = 0; i < m; ++i) v[i] = state(f, path[i]);
      return v;
    }
    switch (f->kind) {
      case Kind::Not: {
        auto a = values(f->child(), path, loop);
        for (std::size_t i = 0; i < m; ++i) v[i] = !a[i];
        return v;
      }
      case Kind::And:
      case Kind::Or:
      case Kind::Implies: {
        auto a = values(f->child(0), path, loop);
        auto b = values(f->child(1), path, loop);
        for (std::size_t i = 0; i < m; ++i)
          v[i] = f->kind == Kind::And ? (a[i] && b[i])
                 : f->kind == Kind::Or ? (a[i] || b[i])
                                       : (!a[i] || b[i]);
        return v;
      }
      case Kind::Next: {
        auto a = values(f->child(), path, loop);
        for (std::size_t i = 0; i < m; ++i) v[i] = a[succ(i)];
        return v;
      }
      case Kind::Until: {
        auto a = values(f->child(0), path, loop);
        auto b = values(f->child(1), path, loop);
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t i = m; i-- > 0;) {
            const char nv = b[i] || (a[i] && v[succ(i)]);
            if (nv != v[i]) {
              v[i] = nv;
              changed = true;
            }
          }
        }
        return v;
      }
      default: break;
    }
    throw std::logic_error("unexpected node in path formula");
  }
};

}  // namespace

bool LassoOracle::check(StateId q, const qctl::Formula& f) {
  Eval e{k_, max_lasso_, {}, {}};
  return e.state(f, q);
}

}  // namespace atlsc::testing
