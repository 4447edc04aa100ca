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

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "atlsc/error.hpp"
#include "atlsc/game.hpp"
#include "atlsc/strategy.hpp"

namespace atlsc::detail {

/// Histories of a game folded to their last `memory` states. A node with
/// fewer states stands for a history that short; the successor of a node
/// under a move vector is computed on demand and cached.
class HistoryGraph {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kNone = std::numeric_limits<NodeId>::max();

  HistoryGraph(const Cgso& game, std::size_t memory, std::size_t max_nodes)
      : game_(game), memory_(std::max<std::size_t>(memory, 1)), max_nodes_(max_nodes) {
    for (std::size_t v = 0; v < game.num_move_vectors(); ++v)
      vectors_.push_back(game.decode_vector(v));
  }

  const Cgso& game() const noexcept { return game_; }
  std::size_t memory() const noexcept { return memory_; }
  std::size_t size() const noexcept { return windows_.size(); }
  const std::vector<std::vector<MoveId>>& vectors() const noexcept { return vectors_; }

  NodeId intern(std::span<const StateId> history) {
    const std::size_t from = history.size() > memory_ ? history.size() - memory_ : 0;
    std::vector<StateId> w(history.begin() + static_cast<std::ptrdiff_t>(from), history.end());
    auto it = index_.find(w);
    if (it != index_.end()) return it->second;
    if (windows_.size() >= max_nodes_)
      throw Error(ErrorKind::ResourceLimit,
                  "history window space exceeds " + std::to_string(max_nodes_) + " nodes");
    const auto id = static_cast<NodeId>(windows_.size());
    index_.emplace(w, id);
    windows_.push_back(std::move(w));
    next_.emplace_back(vectors_.size(), kNone);
    return id;
  }

  std::span<const StateId> window(NodeId u) const { return windows_[u]; }
  StateId state(NodeId u) const { return windows_[u].back(); }

  NodeId step(NodeId u, std::size_t vector) {
    if (next_[u][vector] != kNone) return next_[u][vector];
    std::vector<StateId> w = windows_[u];
    w.push_back(game_.edge(w.back(), vector));
    const NodeId t = intern(w);
    next_[u][vector] = t;
    return t;
  }

  ClassWindow class_window(NodeId u, AgentId agent, std::size_t length) const {
    return atlsc::class_window(game_, agent, length, windows_[u]);
  }

  std::string name(NodeId u) const {
    std::string out;
    for (StateId q : windows_[u]) {
      if (!out.empty()) out += '.';
      out += game_.states[q];
    }
    return out;
  }

 private:
  const Cgso& game_;
  std::size_t memory_;
  std::size_t max_nodes_;
  std::vector<std::vector<MoveId>> vectors_;
  std::vector<std::vector<StateId>> windows_;
  std::map<std::vector<StateId>, NodeId> index_;
  std::vector<std::vector<NodeId>> next_;
};

}  // namespace atlsc::detail
