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

#include "atlsc/error.hpp"

namespace atlsc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::Stratification: return "stratification error";
    case ErrorKind::InvalidGame: return "invalid game";
    case ErrorKind::InvalidPath: return "invalid path";
    case ErrorKind::NotUniform: return "game is not uniform";
    case ErrorKind::UnknownAgent: return "unknown agent";
    case ErrorKind::UnknownProp: return "unknown proposition";
    case ErrorKind::UnknownState: return "unknown state";
    case ErrorKind::ComplementPresent: return "complement operator present";
    case ErrorKind::MemoryfulQuantifier: return "memoryful quantifier";
    case ErrorKind::MemorylessQuantifier: return "memoryless quantifier";
    case ErrorKind::IncompatibleTable: return "incompatible strategy table";
    case ErrorKind::ResourceLimit: return "resource limit exceeded";
    case ErrorKind::EngineMismatch: return "engine mismatch";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

}  // namespace atlsc
