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

#include <string>

#include "atlsc/formula.hpp"

namespace atlsc {
namespace {

enum Level { kImplies = 1, kOr = 2, kAnd = 3, kUntil = 4, kUnary = 5, kAtom = 6 };

std::string agents_text(const Coalition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += c[i];
  }
  return out;
}

std::string wrap(std::string s, int level, int min_level) {
  return level < min_level ? "(" + s + ")" : s;
}

// ATL -------------------------------------------------------------------------

namespace A = atl;

/// StratQ(∅, memoryless, body) below keep() with empty coalition.
bool is_all_paths(const A::Formula& f) {
  if (f->kind != A::Kind::RelaxCo || !f->coalition.empty()) return false;
  const auto& q = f->child();
  return q->kind == A::Kind::StratQ && q->coalition.empty() && q->mode == StrategyMode::Memoryless;
}

std::string print_atl(const A::Formula& f, int min_level);

std::string quant_text(const A::Formula& q, bool box) {
  std::string s = box ? "[[" : "<<";
  if (q->kind == A::Kind::StratQCo) s += q->coalition.empty() ? "co" : "co ";
  s += agents_text(q->coalition);
  s += box ? "]]" : ">>";
  if (q->mode == StrategyMode::Memoryless) s += "_0";
  return s;
}

std::string unary(const std::string& op, const A::Formula& arg, int min_level) {
  return wrap(op + print_atl(arg, kUnary), kUnary, min_level);
}

std::string print_atl(const A::Formula& f, int min_level) {
  using K = A::Kind;
  switch (f->kind) {
    case K::True:
      return "true";
    case K::False:
      return "false";
    case K::Prop:
      return f->prop;
    case K::Not: {
      const auto& g = f->child();
      if (is_all_paths(g) && g->child()->child()->kind == K::Not)
        return unary("E ", g->child()->child()->child(), min_level);
      if ((g->kind == K::StratQ || g->kind == K::StratQCo) && g->child()->kind == K::Not)
        return unary(quant_text(g, true) + " ", g->child()->child(), min_level);
      if (g->kind == K::Until && g->child(0)->kind == K::True && g->child(1)->kind == K::Not)
        return unary("G ", g->child(1)->child(), min_level);
      return unary("!", g, min_level);
    }
    case K::And:
      return wrap(print_atl(f->child(0), kAnd) + " & " + print_atl(f->child(1), kUntil), kAnd,
                  min_level);
    case K::Or:
      return wrap(print_atl(f->child(0), kOr) + " | " + print_atl(f->child(1), kAnd), kOr,
                  min_level);
    case K::Implies:
      return wrap(print_atl(f->child(0), kOr) + " -> " + print_atl(f->child(1), kImplies),
                  kImplies, min_level);
    case K::StratQ:
    case K::StratQCo:
      return unary(quant_text(f, false) + " ", f->child(), min_level);
    case K::Relax:
      return unary("relax(" + agents_text(f->coalition) + ") ", f->child(), min_level);
    case K::RelaxCo:
      if (is_all_paths(f)) return unary("A ", f->child()->child(), min_level);
      return unary("keep(" + agents_text(f->coalition) + ") ", f->child(), min_level);
    case K::Next:
      return unary("X ", f->child(), min_level);
    case K::Until:
      if (f->child(0)->kind == K::True) return unary("F ", f->child(1), min_level);
      return wrap(print_atl(f->child(0), kUnary) + " U " + print_atl(f->child(1), kUntil), kUntil,
                  min_level);
  }
  return {};
}

// QCTL ------------------------------------------------------------------------

namespace Q = qctl;

std::string print_qctl(const Q::Formula& f, int min_level);

std::string qunary(const std::string& op, const Q::Formula& arg, int min_level) {
  return wrap(op + print_qctl(arg, kUnary), kUnary, min_level);
}

std::string print_qctl(const Q::Formula& f, int min_level) {
  using K = Q::Kind;
  switch (f->kind) {
    case K::True:
      return "true";
    case K::False:
      return "false";
    case K::Prop:
      return f->prop;
    case K::Not: {
      const auto& g = f->child();
      if (g->kind == K::Until && g->child(0)->kind == K::True && g->child(1)->kind == K::Not)
        return qunary("G ", g->child(1)->child(), min_level);
      return qunary("!", g, min_level);
    }
    case K::And:
      return wrap(print_qctl(f->child(0), kAnd) + " & " + print_qctl(f->child(1), kUntil), kAnd,
                  min_level);
    case K::Or:
      return wrap(print_qctl(f->child(0), kOr) + " | " + print_qctl(f->child(1), kAnd), kOr,
                  min_level);
    case K::Implies:
      return wrap(print_qctl(f->child(0), kOr) + " -> " + print_qctl(f->child(1), kImplies),
                  kImplies, min_level);
    case K::Exists:
      return qunary("exists " + f->prop + ". ", f->child(), min_level);
    case K::Forall:
      return qunary("forall " + f->prop + ". ", f->child(), min_level);
    case K::EPath:
      return qunary("E ", f->child(), min_level);
    case K::APath:
      return qunary("A ", f->child(), min_level);
    case K::Next:
      return qunary("X ", f->child(), min_level);
    case K::Until:
      if (f->child(0)->kind == K::True) return qunary("F ", f->child(1), min_level);
      return wrap(print_qctl(f->child(0), kUnary) + " U " + print_qctl(f->child(1), kUntil),
                  kUntil, min_level);
  }
  return {};
}

}  // namespace

std::string atl::print(const Formula& f) { return print_atl(f, kImplies); }
std::string qctl::print(const Formula& f) { return print_qctl(f, kImplies); }

}  // namespace atlsc
