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

#include <algorithm>
#include <string>
#include <vector>

#include "atlsc/atoms.hpp"
#include "atlsc/error.hpp"
#include "atlsc/formula.hpp"

namespace atlsc::atl {
namespace {

Formula rebuild(const Formula& f, std::vector<Formula> children) {
  auto n = std::make_shared<Node>(*f);
  n->children = std::move(children);
  return n;
}

void check_agents(const Coalition& c, const std::vector<std::string>& agents) {
  for (const auto& a : c)
    if (std::find(agents.begin(), agents.end(), a) == agents.end())
      throw Error(ErrorKind::UnknownAgent, "unknown agent '" + a + "'");
}

Coalition complement_of(const Coalition& c, const std::vector<std::string>& agents) {
  Coalition out;
  for (const auto& a : agents)
    if (!std::binary_search(c.begin(), c.end(), a)) out.push_back(a);
  return make_coalition(std::move(out));
}

}  // namespace

Formula eliminate_complements(const Formula& f, const std::vector<std::string>& agents) {
  std::vector<Formula> kids;
  kids.reserve(f->children.size());
  for (const auto& c : f->children) kids.push_back(eliminate_complements(c, agents));
  check_agents(f->coalition, agents);
  switch (f->kind) {
    case Kind::StratQCo:
      return with_pos(strat(complement_of(f->coalition, agents), f->mode, kids[0]), f->pos);
    case Kind::RelaxCo:
      return with_pos(relax(complement_of(f->coalition, agents), kids[0]), f->pos);
    default:
      return rebuild(f, std::move(kids));
  }
}

Formula translate_formula_tb(const Formula& f, std::size_t num_agents) {
  if (num_agents <= 1) return f;
  std::vector<Formula> kids;
  kids.reserve(f->children.size());
  for (const auto& c : f->children) kids.push_back(translate_formula_tb(c, num_agents));
  const std::string mid(atoms::kMid);
  switch (f->kind) {
    case Kind::Next: {
      Formula g = kids[0];
      for (std::size_t i = 0; i < num_agents; ++i) g = next(std::move(g));
      return g;
    }
    case Kind::Until:
      return until(disj(prop(mid), kids[0]), conj(neg(prop(mid)), kids[1]));
    default:
      return rebuild(f, std::move(kids));
  }
}

}  // namespace atlsc::atl
