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

#include "atlsc/kripke.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "text_util.hpp"

namespace atlsc {

std::size_t KripkeStructure::transition_count() const noexcept {
  std::size_t n = 0;
  for (const auto& s : successors) n += s.size();
  return n;
}

std::optional<StateId> KripkeStructure::find_state(std::string_view name) const {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) return std::nullopt;
  return static_cast<StateId>(it - states.begin());
}

bool KripkeStructure::has_prop(std::string_view prop) const {
  return std::find(props.begin(), props.end(), prop) != props.end();
}

bool KripkeStructure::has_label(StateId q, std::string_view prop) const {
  return labels.at(q).count(std::string(prop)) > 0;
}

StateId KripkeStructure::add_state(std::string name, std::set<std::string> label) {
  states.push_back(std::move(name));
  labels.push_back(std::move(label));
  successors.emplace_back();
  return static_cast<StateId>(states.size() - 1);
}

void KripkeStructure::add_transition(StateId from, StateId to) {
  auto& succ = successors.at(from);
  auto it = std::lower_bound(succ.begin(), succ.end(), to);
  if (it == succ.end() || *it != to) succ.insert(it, to);
}

std::vector<std::string> KripkeStructure::check() const {
  std::vector<std::string> out;
  if (successors.size() != states.size() || labels.size() != states.size())
    out.push_back("table sizes do not match the number of states");
  for (std::size_t q = 0; q < successors.size(); ++q) {
    if (successors[q].empty()) out.push_back("state '" + states[q] + "' has no successor");
    for (StateId t : successors[q])
      if (t >= states.size()) out.push_back("state '" + states[q] + "' has an undeclared successor");
  }
  if (init && *init >= states.size()) out.push_back("initial state is not declared");
  return out;
}

std::string write_kripke(const KripkeStructure& k) {
  std::ostringstream os;
  os << "props: " << detail::join(k.props) << "\n";
  os << "states: " << detail::join(k.states) << "\n";
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < k.props.size(); ++i) rank.emplace(k.props[i], i);
  for (std::size_t q = 0; q < k.size(); ++q) {
    if (k.labels[q].empty()) continue;
    std::vector<std::string> ps(k.labels[q].begin(), k.labels[q].end());
    std::stable_sort(ps.begin(), ps.end(), [&](const std::string& a, const std::string& b) {
      const auto ra = rank.count(a) ? rank[a] : rank.size();
      const auto rb = rank.count(b) ? rank[b] : rank.size();
      return ra < rb;
    });
    os << "label " << k.states[q] << ": " << detail::join(ps) << "\n";
  }
  for (std::size_t q = 0; q < k.size(); ++q) {
    os << "trans " << k.states[q] << ":";
    for (StateId t : k.successors[q]) os << " " << k.states[t];
    os << "\n";
  }
  if (k.init) os << "init: " << k.states[*k.init] << "\n";
  return os.str();
}

KripkeStructure read_kripke(std::string_view text) {
  using detail::fail_at;
  const auto lines = detail::split_lines(text);
  KripkeStructure k;
  for (const auto& line : lines) {
    if (line.words.size() == 1 && line.words[0] == "states" && line.has_colon) {
      for (auto& s : detail::split_words(line.body)) k.add_state(s);
    } else if (line.words.size() == 1 && line.words[0] == "props" && line.has_colon) {
      k.props = detail::split_words(line.body);
    }
  }
  auto state = [&](const detail::Line& line, const std::string& name) {
    auto q = k.find_state(name);
    if (!q) fail_at(line, "unknown state '" + name + "'");
    return *q;
  };
  for (const auto& line : lines) {
    const auto& w = line.words;
    if (w.empty() || !line.has_colon) fail_at(line, "expected 'keyword:'");
    if (w[0] == "states" || w[0] == "props") continue;
    if (w[0] == "label" && w.size() == 2) {
      for (auto& p : detail::split_words(line.body)) k.labels[state(line, w[1])].insert(p);
    } else if (w[0] == "trans" && w.size() == 2) {
      const StateId from = state(line, w[1]);
      for (auto& t : detail::split_words(line.body)) k.add_transition(from, state(line, t));
    } else if (w[0] == "init" && w.size() == 1) {
      const auto names = detail::split_words(line.body);
      if (names.size() != 1) fail_at(line, "init expects one state");
      k.init = state(line, names[0]);
    } else {
      fail_at(line, "unrecognized line '" + line.head + "'");
    }
  }
  return k;
}

}  // namespace atlsc
