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

#include "atlsc/game_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "atlsc/error.hpp"
#include "text_util.hpp"

namespace atlsc {

using detail::fail_at;
using detail::Line;

namespace {

struct AvailRule {
  StateId state;
  AgentId agent;
  std::vector<MoveId> moves;
};

}  // namespace

Cgso read_game(std::string_view text, const GameReadOptions& options) {
  const auto lines = detail::split_lines(text);
  Cgso g;

  // Declarations first so that later lines may appear in any order.
  auto declared = [](const Line& line, const char* key) {
    return line.has_colon && line.words.size() == 1 && line.words[0] == key;
  };
  for (const auto& line : lines) {
    if (declared(line, "agents")) g.agents = detail::split_words(line.body);
    else if (declared(line, "moves")) g.moves = detail::split_words(line.body);
    else if (declared(line, "props")) g.props = detail::split_words(line.body);
    else if (declared(line, "states")) g.states = detail::split_words(line.body);
  }
  g.labels.assign(g.num_states(), {});
  if (!g.agents.empty() && !g.moves.empty()) g.reset_edges();
  std::vector<std::optional<ObservationPartition>> obs(g.num_agents());
  std::vector<AgentId> owner;
  std::vector<AvailRule> avail;

  auto state = [&](const Line& line, const std::string& name) {
    auto q = g.find_state(name);
    if (!q) fail_at(line, "unknown state '" + name + "'");
    return *q;
  };
  auto agent = [&](const Line& line, const std::string& name) {
    auto a = g.find_agent(name);
    if (!a) fail_at(line, "unknown agent '" + name + "'");
    return *a;
  };
  auto move = [&](const Line& line, const std::string& name) {
    auto m = g.find_move(name);
    if (!m) fail_at(line, "unknown move '" + name + "'");
    return *m;
  };
  auto partition = [&](const Line& line) {
    std::vector<std::vector<StateId>> classes;
    for (const auto& group : detail::parse_groups(line, line.body)) {
      std::vector<StateId> cls;
      for (const auto& name : group) cls.push_back(state(line, name));
      classes.push_back(std::move(cls));
    }
    return ObservationPartition(g.num_states(), std::move(classes));
  };

  for (const auto& line : lines) {
    const auto& w = line.words;
    if (w.empty()) fail_at(line, "empty directive");
    const std::string& key = w[0];
    if (key == "agents" || key == "moves" || key == "props" || key == "states") {
      if (!declared(line, key.c_str())) fail_at(line, "malformed '" + key + "' line");
      continue;
    }
    if (key == "edge") {
      if (line.has_colon) fail_at(line, "edge lines take no ':'");
      // edge q m_1 ... m_p -> t
      if (w.size() != g.num_agents() + 4 || w[w.size() - 2] != "->")
        fail_at(line, "expected 'edge <state> <one move per agent> -> <state>'");
      if (g.agents.empty() || g.moves.empty()) fail_at(line, "edge before agents and moves are declared");
      const StateId from = state(line, w[1]);
      const StateId to = state(line, w.back());
      std::vector<std::optional<MoveId>> pattern;
      for (std::size_t i = 0; i < g.num_agents(); ++i) {
        const auto& tok = w[2 + i];
        pattern.push_back(tok == "*" ? std::nullopt : std::optional<MoveId>(move(line, tok)));
      }
      for (std::size_t v = 0; v < g.num_move_vectors(); ++v) {
        const auto vec = g.decode_vector(v);
        bool match = true;
        for (std::size_t i = 0; i < vec.size() && match; ++i)
          match = !pattern[i] || *pattern[i] == vec[i];
        if (match && g.edge(from, v) == kNoState) g.set_edge(from, v, to);
      }
    } else if (key == "label") {
      if (!line.has_colon || w.size() != 2) fail_at(line, "expected 'label <state>: <props>'");
      const StateId q = state(line, w[1]);
      for (auto& p : detail::split_words(line.body)) g.labels[q].insert(p);
    } else if (key == "obs") {
      if (!line.has_colon || w.size() != 2) fail_at(line, "expected 'obs <agent|uniform>: {..} ...'");
      if (w[1] == "uniform") {
        const auto part = partition(line);
        for (auto& o : obs) o = part;
      } else {
        obs[agent(line, w[1])] = partition(line);
      }
    } else if (key == "owner") {
      if (!line.has_colon || w.size() != 2) fail_at(line, "expected 'owner <state>: <agent>'");
      const auto names = detail::split_words(line.body);
      if (names.size() != 1) fail_at(line, "owner expects one agent");
      if (owner.empty()) owner.assign(g.num_states(), kNoState);
      owner[state(line, w[1])] = agent(line, names[0]);
    } else if (key == "init") {
      const auto names = detail::split_words(line.body);
      if (!line.has_colon || w.size() != 1 || names.size() != 1) fail_at(line, "expected 'init: <state>'");
      g.init = state(line, names[0]);
    } else if (key == "avail") {
      if (!line.has_colon || w.size() != 3) fail_at(line, "expected 'avail <state> <agent>: <moves>'");
      if (!options.normalize_availability)
        fail_at(line, "partial move availability is not supported (every move must be available everywhere)");
      AvailRule rule{state(line, w[1]), agent(line, w[2]), {}};
      for (auto& m : detail::split_words(line.body)) rule.moves.push_back(move(line, m));
      if (rule.moves.empty()) fail_at(line, "avail needs at least one move");
      avail.push_back(std::move(rule));
    } else {
      fail_at(line, "unrecognized directive '" + key + "'");
    }
  }

  for (const auto& rule : avail) {
    std::vector<bool> ok(g.num_moves(), false);
    for (MoveId m : rule.moves) ok[m] = true;
    for (std::size_t v = 0; v < g.num_move_vectors(); ++v) {
      auto vec = g.decode_vector(v);
      if (ok[vec[rule.agent]]) continue;
      vec[rule.agent] = rule.moves.front();
      g.set_edge(rule.state, v, g.edge(rule.state, vec));
    }
  }

  for (std::size_t a = 0; a < g.num_agents(); ++a)
    g.observations.push_back(obs[a] ? std::move(*obs[a]) : ObservationPartition::identity(g.num_states()));
  if (!owner.empty()) {
    for (std::size_t q = 0; q < owner.size(); ++q)
      if (owner[q] == kNoState)
        throw Error(ErrorKind::Syntax, "owner missing for state '" + g.states[q] + "' (owner lines must cover every state)");
    g.owner = std::move(owner);
  }
  return g;
}

namespace {

std::string groups_text(const Cgso& g, const ObservationPartition& part) {
  std::string out;
  for (const auto& cls : part.classes()) {
    out += out.empty() ? "{" : " {";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) out += ' ';
      out += g.states[cls[i]];
    }
    out += '}';
  }
  return out;
}

}  // namespace

std::string write_game(const Cgso& g) {
  std::ostringstream os;
  os << "agents: " << detail::join(g.agents) << "\n";
  os << "moves: " << detail::join(g.moves) << "\n";
  os << "props: " << detail::join(g.props) << "\n";
  os << "states: " << detail::join(g.states) << "\n";
  for (std::size_t q = 0; q < g.num_states(); ++q) {
    if (g.labels[q].empty()) continue;
    std::vector<std::string> ps;
    for (const auto& p : g.props)
      if (g.labels[q].count(p)) ps.push_back(p);
    for (const auto& p : g.labels[q])
      if (std::find(g.props.begin(), g.props.end(), p) == g.props.end()) ps.push_back(p);
    os << "label " << g.states[q] << ": " << detail::join(ps) << "\n";
  }
  // Identical partitions whose class order also matches print as `uniform`,
  // which keeps class indices stable across a round trip.
  bool same_order = !g.observations.empty();
  for (const auto& part : g.observations)
    same_order = same_order && part.classes() == g.observations.front().classes();
  if (same_order) {
    os << "obs uniform: " << groups_text(g, g.observations.front()) << "\n";
  } else {
    for (std::size_t a = 0; a < g.num_agents(); ++a)
      os << "obs " << g.agents[a] << ": " << groups_text(g, g.observations[a]) << "\n";
  }

  const std::size_t nv = g.num_move_vectors();
  for (std::size_t q = 0; q < g.num_states(); ++q) {
    const auto sq = static_cast<StateId>(q);
    auto stars = [&](std::size_t except, const std::string& m) {
      std::string s;
      for (std::size_t a = 0; a < g.num_agents(); ++a) s += " " + (a == except ? m : std::string("*"));
      return s;
    };
    const StateId first = g.edge(sq, 0);
    bool constant = first != kNoState;
    for (std::size_t v = 1; v < nv && constant; ++v) constant = g.edge(sq, v) == first;
    if (constant) {
      os << "edge " << g.states[q] << stars(g.num_agents(), "") << " -> " << g.states[first] << "\n";
      continue;
    }
    if (g.owner && (*g.owner)[q] < g.num_agents()) {
      const AgentId o = (*g.owner)[q];
      // Valid only when the owner alone decides the successor.
      std::vector<StateId> by_move(g.num_moves(), kNoState);
      bool owner_decides = true;
      for (std::size_t v = 0; v < nv && owner_decides; ++v) {
        const MoveId m = g.decode_vector(v)[o];
        if (by_move[m] == kNoState) by_move[m] = g.edge(sq, v);
        else owner_decides = by_move[m] == g.edge(sq, v);
      }
      if (owner_decides && std::find(by_move.begin(), by_move.end(), kNoState) == by_move.end()) {
        for (MoveId m = 0; m < g.num_moves(); ++m)
          os << "edge " << g.states[q] << stars(o, g.moves[m]) << " -> " << g.states[by_move[m]] << "\n";
        continue;
      }
    }
    for (std::size_t v = 0; v < nv; ++v) {
      const StateId t = g.edge(sq, v);
      if (t == kNoState) continue;
      os << "edge " << g.states[q];
      for (MoveId m : g.decode_vector(v)) os << " " << g.moves[m];
      os << " -> " << g.states[t] << "\n";
    }
  }
  if (g.owner)
    for (std::size_t q = 0; q < g.num_states(); ++q)
      os << "owner " << g.states[q] << ": " << g.agents.at((*g.owner)[q]) << "\n";
  if (g.init) os << "init: " << g.states[*g.init] << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace atlsc
