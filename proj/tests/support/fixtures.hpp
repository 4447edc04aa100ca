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

#include "atlsc/game.hpp"
#include "atlsc/game_io.hpp"

#ifndef ATLSC_TEST_DATA_DIR
#error "ATLSC_TEST_DATA_DIR must point at tests/data"
#endif

namespace atlsc::testing {

inline std::string data_path(const std::string& name) {
  return std::string(ATLSC_TEST_DATA_DIR) + "/" + name;
}

inline Cgso load_game(const std::string& name) { return read_game(read_file(data_path(name))); }

inline Cgso hidden_pair() { return load_game("hidden_pair.game"); }
inline Cgso hidden_choice() { return load_game("hidden_choice.game"); }

}  // namespace atlsc::testing
