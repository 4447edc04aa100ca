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
#include <vector>

#include "atlsc/error.hpp"

namespace atlsc::detail {

struct Line {
  std::size_t number = 0;
  std::string head;                 // text before ':' (or whole line if none)
  std::vector<std::string> words;   // head split on whitespace
  std::string body;                 // text after the first ':'
  bool has_colon = false;
};

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Drops a comment: `#` starts one only at the beginning of a token, so
/// reserved names such as `p#q0` survive.
inline std::string_view strip_comment(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '#' && (i == 0 || is_space(s[i - 1]))) return s.substr(0, i);
  return s;
}

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = strip_comment(text.substr(pos, end - pos));
    pos = end + 1;
    if (split_words(raw).empty()) {
      if (end == text.size()) break;
      continue;
    }
    Line line;
    line.number = number;
    const auto colon = raw.find(':');
    if (colon != std::string_view::npos) {
      line.has_colon = true;
      line.head = std::string(raw.substr(0, colon));
      line.body = std::string(raw.substr(colon + 1));
    } else {
      line.head = std::string(raw);
    }
    line.words = split_words(line.head);
    out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

[[noreturn]] inline void fail_at(const Line& line, const std::string& message) {
  throw Error(ErrorKind::Syntax, "line " + std::to_string(line.number) + ": " + message);
}

/// Parses `{a b} {c}` into groups.
inline std::vector<std::vector<std::string>> parse_groups(const Line& line, std::string_view s) {
  std::vector<std::vector<std::string>> groups;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      ++i;
      continue;
    }
    if (s[i] != '{') fail_at(line, "expected '{'");
    const auto close = s.find('}', i);
    if (close == std::string_view::npos) fail_at(line, "unterminated '{'");
    groups.push_back(split_words(s.substr(i + 1, close - i - 1)));
    i = close + 1;
  }
  return groups;
}

inline std::string join(const std::vector<std::string>& words, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += words[i];
  }
  return out;
}

}  // namespace atlsc::detail
