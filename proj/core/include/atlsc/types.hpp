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

#include <cstdint>
#include <limits>

namespace atlsc {

using StateId = std::uint32_t;
using AgentId = std::uint32_t;
using MoveId = std::uint32_t;
using ClassId = std::uint32_t;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();
inline constexpr ClassId kNoClass = std::numeric_limits<ClassId>::max();

}  // namespace atlsc
