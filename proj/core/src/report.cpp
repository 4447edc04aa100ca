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

#include "atlsc/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace atlsc {

std::string to_json(const CheckReport& report) {
  // ordered_json keeps the documented field order.
  nlohmann::ordered_json j;
  j["verdict"] = report.verdict;
  j["engine"] = report.engine;
  j["witnesses"] = report.witnesses;
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.stats) stats[name] = value;
  if (report.wall_ms) stats["wall_ms"] = *report.wall_ms;
  j["stats"] = stats;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [name, digest] : report.inputs) inputs[name] = digest;
  j["inputs"] = inputs;
  return j.dump(2) + "\n";
}

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace atlsc
