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

#include "cli.hpp"

#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "atlsc/error.hpp"
#include "atlsc/formula.hpp"
#include "atlsc/game.hpp"
#include "atlsc/game_io.hpp"
#include "atlsc/kripke.hpp"
#include "atlsc/qctl_checker.hpp"
#include "atlsc/reductions.hpp"
#include "atlsc/report.hpp"
#include "atlsc/strategy_engine.hpp"

namespace atlsc::cli {
namespace {

struct CheckArgs {
  std::string game_file;
  std::string formula;
  std::string engine;
  std::optional<unsigned> window;
  std::string state;
  std::string logic = "atl";
  bool timing = false;
};

struct TranslateArgs {
  std::string game_file;
  std::string formula;
  std::string semantics = "structure";
  std::string state;
  std::string prefix = "translation";
};

struct TurnBasedArgs {
  std::string game_file;
  std::vector<std::string> order;
  std::string output;
  std::string formula;
  std::string formula_output;
};

std::string join_states(const std::vector<std::string>& names, const std::vector<StateId>& states) {
  std::string out = "{";
  for (StateId q : states) {
    if (out.size() > 1) out += ' ';
    out += names[q];
  }
  return out + "}";
}

StateId pick_state(const std::string& name, std::optional<StateId> init,
                   std::optional<StateId> found) {
  if (!name.empty()) {
    if (!found) throw Error(ErrorKind::UnknownState, "unknown state '" + name + "'");
    return *found;
  }
  return init.value_or(0);
}

CheckReport reduction_report(const Cgso& game, StateId q, const atl::Formula& f) {
  const Reduction r = reductions::build_memoryless_reduction(game, f);
  QctlChecker checker(r.structure);
  CheckReport rep;
  rep.verdict = checker.check(q, r.formula);
  rep.engine = "memoryless-reduction";
  for (const auto& v : checker.witness())
    rep.witnesses.push_back(v.prop + " = " + join_states(r.structure.states, v.states));
  const auto& s = checker.stats();
  rep.stats["structure_states"] = r.structure.size();
  rep.stats["formula_nodes"] = qctl::size(r.formula);
  rep.stats["search_nodes"] = s.search_nodes;
  rep.stats["evaluations"] = s.evaluations;
  rep.stats["memo_hits"] = s.memo_hits;
  rep.stats["ltl_checks"] = s.ltl.checks;
  rep.stats["product_states"] = s.ltl.product_states;
  return rep;
}

int cmd_validate(const std::string& file, std::ostream& out, std::ostream& err) {
  const Cgso game = read_game(read_file(file));
  const auto diags = validate(game);
  for (const auto& d : diags) err << d.invariant << ": " << d.message << "\n";
  if (!diags.empty()) return 2;
  out << "valid\n";
  return 0;
}

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_file(a.game_file);
  CheckReport rep;
  if (a.logic == "qctl") {
    if (!a.engine.empty() && a.engine != "qctl")
      throw Error(ErrorKind::EngineMismatch, "QCTL formulas are checked on Kripke structures only");
    const KripkeStructure k = read_kripke(text);
    const qctl::Formula f = qctl::parse(a.formula);
    const StateId q = pick_state(a.state, k.init, k.find_state(a.state));
    QctlChecker checker(k);
    rep.verdict = checker.check(q, f);
    rep.engine = "qctl-structure";
    for (const auto& v : checker.witness())
      rep.witnesses.push_back(v.prop + " = " + join_states(k.states, v.states));
    rep.stats["search_nodes"] = checker.stats().search_nodes;
    rep.stats["evaluations"] = checker.stats().evaluations;
    rep.stats["ltl_checks"] = checker.stats().ltl.checks;
  } else {
    const Cgso game = read_game(text);
    require_valid(game);
    const atl::Formula f = atl::eliminate_complements(atl::parse(a.formula), game.agents);
    const StateId q = pick_state(a.state, game.init, game.find_state(a.state));
    const bool memoryful = atl::has_mode(f, StrategyMode::Memoryful);
    std::string engine = a.engine;
    if (engine.empty()) engine = memoryful || a.window ? "windowed" : "reduction";
    if (memoryful && engine != "windowed")
      throw Error(ErrorKind::EngineMismatch,
                  "memoryful quantifiers require --engine windowed");
    if (engine == "direct")
      rep = check_memoryless(game, q, f);
    else if (engine == "reduction")
      rep = reduction_report(game, q, f);
    else
      rep = check_windowed(game, q, f, a.window.value_or(3));
  }
  rep.inputs["formula"] = fnv1a64_hex(a.formula);
  rep.inputs["game"] = fnv1a64_hex(text);
  if (a.timing)
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
  out << to_json(rep);
  return rep.verdict ? 0 : 1;
}

int cmd_translate(const TranslateArgs& a, std::ostream& out) {
  const Cgso game = read_game(read_file(a.game_file));
  require_valid(game);
  const atl::Formula f = atl::eliminate_complements(atl::parse(a.formula), game.agents);
  Coalition everyone = make_coalition(game.agents);
  Reduction r;
  qctl::Formula outcome;
  if (a.semantics == "tree") {
    const StateId q = pick_state(a.state, game.init, game.find_state(a.state));
    r = reductions::build_uniform_reduction(game, q, f);
    outcome = reductions::phi_out(game, 1, everyone);
  } else {
    r = reductions::build_memoryless_reduction(game, f);
    outcome = reductions::phi_out_memoryless(game, everyone);
  }
  write_file(a.prefix + ".kripke", write_kripke(r.structure));
  write_file(a.prefix + ".qctl", qctl::print(r.formula) + "\n");

  const std::size_t q = game.num_states();
  const std::size_t vectors = game.num_move_vectors();
  const std::size_t p = game.num_agents();
  const std::size_t m = game.num_moves();
  out << "structure: " << r.structure.size() << " states, " << r.structure.transition_count()
      << " transitions -> " << a.prefix << ".kripke\n";
  out << "formula: " << qctl::size(r.formula) << " nodes -> " << a.prefix << ".qctl\n";
  out << "outcome constraint: " << qctl::size(outcome) << " nodes, |Q|^2*r^p = " << q * q * vectors
      << "\n";
  out << "formula bound |f|*|Q|*(p*r^2+|Q|*|Edg|) = "
      << atl::size(f) * q * (p * m * m + q * q * vectors) << "\n";
  return 0;
}

int cmd_to_turn_based(const TurnBasedArgs& a, std::ostream& out, std::ostream& err) {
  const Cgso game = read_game(read_file(a.game_file));
  require_valid(game);
  std::vector<AgentId> order;
  if (a.order.empty()) {
    for (AgentId i = 0; i < game.num_agents(); ++i) order.push_back(i);
  } else {
    for (const auto& name : a.order) {
      auto id = game.find_agent(name);
      if (!id) throw Error(ErrorKind::UnknownAgent, "unknown agent '" + name + "' in --order");
      order.push_back(*id);
    }
  }
  const std::string text = write_game(to_turn_based(game, order));
  if (a.output.empty())
    out << text;
  else
    write_file(a.output, text);
  if (!a.formula.empty()) {
    const atl::Formula f = atl::eliminate_complements(atl::parse(a.formula), game.agents);
    const std::string tb = atl::print(atl::translate_formula_tb(f, game.num_agents()));
    if (a.formula_output.empty())
      err << "translated formula: " << tb << "\n";
    else
      write_file(a.formula_output, tb + "\n");
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Model checking for ATL with strategy contexts over games with partial observation",
               "atlsc"};
  app.require_subcommand(1);

  std::string validate_file;
  auto* validate_cmd = app.add_subcommand("validate", "Check a game file for structural problems");
  validate_cmd->add_option("game", validate_file, "Game file")->required();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide a formula at a state and print a JSON report");
  check_cmd->add_option("game", check.game_file, "Game file (Kripke file with --logic qctl)")->required();
  check_cmd->add_option("formula", check.formula, "State formula")->required();
  check_cmd->add_option("--engine", check.engine, "direct, reduction or windowed")
      ->check(CLI::IsMember({"direct", "reduction", "windowed", "qctl"}));
  check_cmd->add_option("--window", check.window, "Window length of memoryful strategies")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--state", check.state, "Start state (default: init)");
  check_cmd->add_option("--logic", check.logic, "atl or qctl")->check(CLI::IsMember({"atl", "qctl"}));
  check_cmd->add_flag("--timing", check.timing, "Add wall time to the report");

  TranslateArgs translate;
  auto* translate_cmd =
      app.add_subcommand("translate", "Emit the companion Kripke structure and QCTL formula");
  translate_cmd->add_option("game", translate.game_file, "Game file")->required();
  translate_cmd->add_option("formula", translate.formula, "State formula")->required();
  translate_cmd->add_option("--semantics", translate.semantics, "tree or structure")
      ->check(CLI::IsMember({"tree", "structure"}));
  translate_cmd->add_option("--state", translate.state, "Initial state for the tree translation");
  translate_cmd->add_option("-o,--output", translate.prefix, "Output prefix");

  TurnBasedArgs tb;
  auto* tb_cmd = app.add_subcommand("to-turn-based", "Sequentialize a concurrent game");
  tb_cmd->add_option("game", tb.game_file, "Game file")->required();
  tb_cmd->add_option("--order", tb.order, "Agent order, e.g. a2,a1")->delimiter(',');
  tb_cmd->add_option("-o,--output", tb.output, "Output game file (default: stdout)");
  tb_cmd->add_option("--formula", tb.formula, "Formula to translate alongside");
  tb_cmd->add_option("--formula-out", tb.formula_output, "Where to write the translated formula");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(validate_file, out, err);
    if (*check_cmd) return cmd_check(check, out);
    if (*translate_cmd) return cmd_translate(translate, out);
    if (*tb_cmd) return cmd_to_turn_based(tb, out, err);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace atlsc::cli
