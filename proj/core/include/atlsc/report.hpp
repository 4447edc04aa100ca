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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atlsc {

/// Outcome of one model-checking run.
struct CheckReport {
  bool verdict = false;
  /// memoryless-direct, memoryless-reduction, windowed(k) or qctl-structure.
  std::string engine;
  std::vector<std::string> witnesses;
  std::map<std::string, std::uint64_t> stats;
  /// Only filled when timing was requested, so reports stay reproducible.
  std::optional<double> wall_ms;
  /// Input name -> digest.
  std::map<std::string, std::string> inputs;
};

/// Serializes with the fixed field order verdict, engine, witnesses, stats, inputs.
std::string to_json(const CheckReport& report);

/// 64-bit FNV-1a digest as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view data);

}  // namespace atlsc
