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

#include <string>
#include <string_view>

#include "atlsc/game.hpp"

namespace atlsc {

struct GameReadOptions {
  /// Accept `avail q a: m...` lines by redirecting every unavailable move of
  /// `a` at `q` to its first available move. Without it such lines are an
  /// error: every move must be available everywhere.
  bool normalize_availability = false;
};

/// Parses the line-oriented game format. Syntax problems throw
/// Error(Syntax); structural problems are left for validate().
Cgso read_game(std::string_view text, const GameReadOptions& options = {});

/// Canonical text form; read_game(write_game(g)) reproduces g exactly.
std::string write_game(const Cgso& game);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace atlsc
