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

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atlsc/error.hpp"
#include "atlsc/formula.hpp"

namespace atlsc {
namespace {

enum class Tok {
  Ident,
  OpenStrat,    // <<
  CloseStrat,   // >>
  OpenBox,      // [[
  CloseBox,     // ]]
  Zero,         // _0 directly after >> or ]]
  LParen,
  RParen,
  Comma,
  Bang,
  Amp,
  Bar,
  Arrow,
  Dot,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '#';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '@' ||
         c == '~' || c == '\'';
}

std::string where(SourcePos p) {
  return std::to_string(p.line) + ":" + std::to_string(p.column) + ": ";
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::uint32_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto starts = [&](std::string_view t) { return s.substr(i, t.size()) == t; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const SourcePos pos{line, col};
    auto emit = [&](Tok k, std::size_t n) {
      out.push_back({k, std::string(s.substr(i, n)), pos});
      advance(n);
    };
    if (starts("<<")) {
      emit(Tok::OpenStrat, 2);
    } else if (starts(">>") || starts("]]")) {
      emit(c == '>' ? Tok::CloseStrat : Tok::CloseBox, 2);
      if (starts("_0") && !(i + 2 < s.size() && ident_char(s[i + 2])))
        out.push_back({Tok::Zero, "_0", {line, col}}), advance(2);
    } else if (starts("[[")) {
      emit(Tok::OpenBox, 2);
    } else if (starts("->")) {
      emit(Tok::Arrow, 2);
    } else if (c == '(') {
      emit(Tok::LParen, 1);
    } else if (c == ')') {
      emit(Tok::RParen, 1);
    } else if (c == ',') {
      emit(Tok::Comma, 1);
    } else if (c == '!') {
      emit(Tok::Bang, 1);
    } else if (c == '&') {
      emit(Tok::Amp, 1);
    } else if (c == '|') {
      emit(Tok::Bar, 1);
    } else if (c == '.') {
      emit(Tok::Dot, 1);
    } else if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      emit(Tok::Ident, j - i);
    } else {
      throw Error(ErrorKind::Syntax, where(pos) + "unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

bool is_keyword(std::string_view t) {
  static constexpr std::string_view kKeywords[] = {"X",     "U",      "F",     "G",    "E",
                                                   "A",     "true",   "false", "exists",
                                                   "forall", "relax", "keep",  "co"};
  for (auto k : kKeywords)
    if (t == k) return true;
  return false;
}

enum class Ctx { State, Path };

/// Shared operator-precedence layers; the logic supplies parse_unary().
template <typename Derived, typename F>
class ParserBase {
 public:
  explicit ParserBase(std::string_view text) : toks_(lex(text)) {}

  F parse_top() {
    F f = parse_formula(Ctx::State);
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
    return f;
  }

 protected:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool at_ident(std::string_view t) const { return peek().kind == Tok::Ident && peek().text == t; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, std::string_view what) {
    if (peek().kind != k)
      fail(peek(), "expected " + std::string(what) +
                       (peek().kind == Tok::End ? " at end of input" : ", found '" + peek().text + "'"));
    return take();
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw Error(ErrorKind::Syntax, where(t.pos) + msg);
  }
  [[noreturn]] void temporal_in_state(const Token& t) const {
    throw Error(ErrorKind::Stratification,
                where(t.pos) + "temporal operator '" + t.text + "' used where a state formula is required");
  }

  std::string expect_prop_name() {
    const Token& t = expect(Tok::Ident, "proposition");
    if (is_keyword(t.text)) fail(t, "keyword '" + t.text + "' cannot be used as a proposition");
    return t.text;
  }

  F parse_formula(Ctx ctx) {
    F lhs = parse_or(ctx);
    if (peek().kind == Tok::Arrow) {
      const SourcePos p = take().pos;
      F rhs = parse_formula(ctx);
      return D::with_pos(D::implies(std::move(lhs), std::move(rhs)), p);
    }
    return lhs;
  }

  F parse_or(Ctx ctx) {
    F lhs = parse_and(ctx);
    while (peek().kind == Tok::Bar) {
      const SourcePos p = take().pos;
      lhs = D::with_pos(D::disj(std::move(lhs), parse_and(ctx)), p);
    }
    return lhs;
  }

  F parse_and(Ctx ctx) {
    F lhs = parse_until(ctx);
    while (peek().kind == Tok::Amp) {
      const SourcePos p = take().pos;
      lhs = D::with_pos(D::conj(std::move(lhs), parse_until(ctx)), p);
    }
    return lhs;
  }

  F parse_until(Ctx ctx) {
    F lhs = self().parse_unary(ctx);
    if (at_ident("U")) {
      const Token& t = take();
      if (ctx == Ctx::State) temporal_in_state(t);
      F rhs = parse_until(ctx);
      return D::with_pos(D::until(std::move(lhs), std::move(rhs)), t.pos);
    }
    return lhs;
  }

  /// Common unary forms; returns false if the token is logic specific.
  bool parse_common_unary(Ctx ctx, F& out) {
    const Token& t = peek();
    if (t.kind == Tok::Bang) {
      take();
      out = D::with_pos(D::neg(self().parse_unary(ctx)), t.pos);
      return true;
    }
    if (t.kind == Tok::LParen) {
      take();
      out = parse_formula(ctx);
      expect(Tok::RParen, "')'");
      return true;
    }
    if (t.kind != Tok::Ident) return false;
    if (t.text == "true" || t.text == "false") {
      take();
      out = D::with_pos(t.text == "true" ? D::tt() : D::ff(), t.pos);
      return true;
    }
    if (t.text == "X" || t.text == "F" || t.text == "G") {
      const Token op = take();
      if (ctx == Ctx::State) temporal_in_state(op);
      F arg = self().parse_unary(ctx);
      if (op.text == "X") out = D::next(std::move(arg));
      else if (op.text == "F") out = D::eventually(std::move(arg));
      else out = D::always(std::move(arg));
      out = D::with_pos(std::move(out), op.pos);
      return true;
    }
    if (t.text == "U") fail(t, "missing left operand of 'U'");
    if (!is_keyword(t.text)) {
      if (!D::kReservedNames && t.text.find('#') != std::string::npos)
        fail(t, "'" + t.text + "' uses the reserved character '#'");
      take();
      out = D::with_pos(D::prop(t.text), t.pos);
      return true;
    }
    return false;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;

 private:
  using D = Derived;
  Derived& self() { return static_cast<Derived&>(*this); }
};

// ATL -------------------------------------------------------------------------

struct AtlOps {
  static constexpr bool kReservedNames = false;
  static atl::Formula tt() { return atl::tt(); }
  static atl::Formula ff() { return atl::ff(); }
  static atl::Formula prop(std::string p) { return atl::prop(std::move(p)); }
  static atl::Formula neg(atl::Formula f) { return atl::neg(std::move(f)); }
  static atl::Formula conj(atl::Formula a, atl::Formula b) { return atl::conj(std::move(a), std::move(b)); }
  static atl::Formula disj(atl::Formula a, atl::Formula b) { return atl::disj(std::move(a), std::move(b)); }
  static atl::Formula implies(atl::Formula a, atl::Formula b) {
    return atl::implies(std::move(a), std::move(b));
  }
  static atl::Formula next(atl::Formula f) { return atl::next(std::move(f)); }
  static atl::Formula until(atl::Formula a, atl::Formula b) { return atl::until(std::move(a), std::move(b)); }
  static atl::Formula eventually(atl::Formula f) { return atl::eventually(std::move(f)); }
  static atl::Formula always(atl::Formula f) { return atl::always(std::move(f)); }
  static atl::Formula with_pos(atl::Formula f, SourcePos p) { return atl::with_pos(std::move(f), p); }
};

class AtlParser : public ParserBase<AtlParser, atl::Formula>, public AtlOps {
 public:
  using ParserBase::ParserBase;

  atl::Formula parse_unary(Ctx ctx) {
    atl::Formula out;
    if (parse_common_unary(ctx, out)) return out;
    const Token t = peek();
    if (t.kind == Tok::OpenStrat || t.kind == Tok::OpenBox) {
      take();
      const bool box = t.kind == Tok::OpenBox;
      bool co = false;
      if (at_ident("co")) {
        take();
        co = true;
      }
      Coalition agents = parse_agents(box ? Tok::CloseBox : Tok::CloseStrat);
      expect(box ? Tok::CloseBox : Tok::CloseStrat, box ? "']]'" : "'>>'");
      const StrategyMode mode = accept(Tok::Zero) ? StrategyMode::Memoryless : StrategyMode::Memoryful;
      atl::Formula body = parse_unary(Ctx::Path);
      if (box) body = atl::neg(std::move(body));
      atl::Formula q = co ? atl::strat_co(std::move(agents), mode, std::move(body))
                          : atl::strat(std::move(agents), mode, std::move(body));
      if (box) q = atl::neg(std::move(q));
      return atl::with_pos(std::move(q), t.pos);
    }
    if (t.kind == Tok::Ident && (t.text == "relax" || t.text == "keep")) {
      take();
      expect(Tok::LParen, "'('");
      Coalition agents = parse_agents(Tok::RParen);
      expect(Tok::RParen, "')'");
      atl::Formula body = parse_unary(Ctx::State);
      return atl::with_pos(t.text == "relax" ? atl::relax(std::move(agents), std::move(body))
                                             : atl::relax_co(std::move(agents), std::move(body)),
                           t.pos);
    }
    if (t.kind == Tok::Ident && (t.text == "E" || t.text == "A")) {
      take();
      atl::Formula body = parse_unary(Ctx::Path);
      return atl::with_pos(t.text == "A" ? atl::all_paths(std::move(body))
                                         : atl::some_path(std::move(body)),
                           t.pos);
    }
    if (t.kind == Tok::End) fail(t, "unexpected end of input");
    if (t.kind == Tok::Ident) {
      if (t.text == "exists" || t.text == "forall")
        fail(t, "proposition quantifier '" + t.text + "' is not part of this logic");
      fail(t, "keyword '" + t.text + "' cannot start a formula");
    }
    fail(t, "unexpected '" + t.text + "'");
  }

 private:
  Coalition parse_agents(Tok close) {
    std::vector<std::string> agents;
    if (peek().kind == close) return agents;
    for (;;) {
      const Token& a = expect(Tok::Ident, "agent name");
      if (is_keyword(a.text)) fail(a, "keyword '" + a.text + "' cannot be used as an agent");
      if (a.text.find('#') != std::string::npos) fail(a, "'" + a.text + "' uses the reserved character '#'");
      agents.push_back(a.text);
      if (!accept(Tok::Comma)) break;
    }
    return make_coalition(std::move(agents));
  }
};

// QCTL ------------------------------------------------------------------------

struct QctlOps {
  // Emitted reductions carry reserved atoms and must read back.
  static constexpr bool kReservedNames = true;
  static qctl::Formula tt() { return qctl::tt(); }
  static qctl::Formula ff() { return qctl::ff(); }
  static qctl::Formula prop(std::string p) { return qctl::prop(std::move(p)); }
  static qctl::Formula neg(qctl::Formula f) { return qctl::neg(std::move(f)); }
  static qctl::Formula conj(qctl::Formula a, qctl::Formula b) { return qctl::conj(std::move(a), std::move(b)); }
  static qctl::Formula disj(qctl::Formula a, qctl::Formula b) { return qctl::disj(std::move(a), std::move(b)); }
  static qctl::Formula implies(qctl::Formula a, qctl::Formula b) {
    return qctl::implies(std::move(a), std::move(b));
  }
  static qctl::Formula next(qctl::Formula f) { return qctl::next(std::move(f)); }
  static qctl::Formula until(qctl::Formula a, qctl::Formula b) {
    return qctl::until(std::move(a), std::move(b));
  }
  static qctl::Formula eventually(qctl::Formula f) { return qctl::eventually(std::move(f)); }
  static qctl::Formula always(qctl::Formula f) { return qctl::always(std::move(f)); }
  static qctl::Formula with_pos(qctl::Formula f, SourcePos p) { return qctl::with_pos(std::move(f), p); }
};

class QctlParser : public ParserBase<QctlParser, qctl::Formula>, public QctlOps {
 public:
  using ParserBase::ParserBase;

  qctl::Formula parse_unary(Ctx ctx) {
    qctl::Formula out;
    if (parse_common_unary(ctx, out)) return out;
    const Token t = peek();
    if (t.kind == Tok::Ident && (t.text == "E" || t.text == "A")) {
      take();
      qctl::Formula body = parse_unary(Ctx::Path);
      return qctl::with_pos(t.text == "E" ? qctl::epath(std::move(body)) : qctl::apath(std::move(body)),
                            t.pos);
    }
    if (t.kind == Tok::Ident && (t.text == "exists" || t.text == "forall")) {
      take();
      std::string p = expect_prop_name();
      expect(Tok::Dot, "'.'");
      qctl::Formula body = parse_unary(Ctx::State);
      return qctl::with_pos(t.text == "exists" ? qctl::exists(std::move(p), std::move(body))
                                               : qctl::forall(std::move(p), std::move(body)),
                            t.pos);
    }
    if (t.kind == Tok::End) fail(t, "unexpected end of input");
    if (t.kind == Tok::OpenStrat || t.kind == Tok::OpenBox)
      fail(t, "strategy quantifiers are not part of this logic");
    if (t.kind == Tok::Ident) fail(t, "keyword '" + t.text + "' cannot start a formula");
    fail(t, "unexpected '" + t.text + "'");
  }
};

}  // namespace

atl::Formula atl::parse(std::string_view text) { return AtlParser(text).parse_top(); }
qctl::Formula qctl::parse(std::string_view text) { return QctlParser(text).parse_top(); }

}  // namespace atlsc
