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

#include <gtest/gtest.h>

#include "atlsc/error.hpp"
#include "atlsc/formula.hpp"
#include "atlsc/kripke.hpp"
#include "atlsc/qctl_checker.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace atlsc {
namespace {

using qctl::parse;

/// Builds a structure from (labels, successor lists).
KripkeStructure make(const std::vector<std::set<std::string>>& labels,
                     const std::vector<std::vector<StateId>>& succ,
                     std::vector<std::string> props = {"p", "q"}) {
  KripkeStructure k;
  k.props = std::move(props);
  for (std::size_t i = 0; i < labels.size(); ++i) k.add_state("s" + std::to_string(i), labels[i]);
  for (std::size_t i = 0; i < succ.size(); ++i)
    for (StateId t : succ[i]) k.add_transition(static_cast<StateId>(i), t);
  k.init = 0;
  return k;
}

TEST(Structure, SpecExamples) {
  const auto one = make({{"p"}}, {{0}});
  EXPECT_TRUE(check_structure(one, 0, parse("exists Q. (Q & A G p)")));
  EXPECT_FALSE(check_structure(one, 0, parse("forall Q. Q")));

  const auto cycle = make({{}, {"p"}}, {{1}, {0}});
  EXPECT_TRUE(check_structure(cycle, 0, parse("A G E F p")));
  EXPECT_TRUE(check_ctlstar(cycle, 0, parse("A G E F p")));
  EXPECT_FALSE(check_ctlstar(cycle, 0, parse("E G p")));

  for (const auto& k : {one, cycle}) EXPECT_TRUE(check_ctlstar(k, 0, parse("E G true")));

  const auto leave = make({{"p"}, {}}, {{1}, {1}});
  EXPECT_FALSE(check_ctlstar(leave, 0, parse("E G p")));
  EXPECT_TRUE(check_ctlstar(leave, 0, parse("A F G !p")));
}

// Root s0 with self-looping successors s1 and s2; the flags say which of
// them satisfy q.
KripkeStructure fan(bool first, bool second) {
  std::set<std::string> l1, l2;
  if (first) l1.insert("q");
  if (second) l2.insert("q");
  return make({{}, l1, l2}, {{1, 2}, {1}, {2}});
}

TEST(Ex1, CanonicalSuccessorConfigurations) {
  const auto f = qctl::ex1(qctl::prop("q"));
  EXPECT_FALSE(check_structure(fan(false, false), 0, f));
  EXPECT_TRUE(check_structure(fan(true, false), 0, f));
  EXPECT_TRUE(check_structure(fan(false, true), 0, f));
  EXPECT_FALSE(check_structure(fan(true, true), 0, f));
  // A single successor reached by one edge only.
  EXPECT_TRUE(check_structure(make({{}, {"q"}}, {{1}, {1}}), 0, f));
}

TEST(Ex1, MatchesSuccessorCountOnRandomStructures) {
  testing::Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    const auto k = testing::random_kripke(rng, 4, {"p", "q"}, 3);
    const auto f = qctl::ex1(parse("q | E X p"));
    const StateSet inner = QctlChecker(k).satisfying_states(parse("q | E X p"));
    for (StateId s = 0; s < k.size(); ++s) {
      std::size_t n = 0;
      for (StateId t : k.successors[s]) n += inner.test(t);
      EXPECT_EQ(check_structure(k, s, f), n == 1);
    }
  }
}

TEST(Structure, QuantifierDuality) {
  testing::Rng rng(32);
  testing::QctlShape shape;
  shape.props = {"p", "q", "P1"};
  shape.bound = {"P2"};
  for (int i = 0; i < 50; ++i) {
    const auto k = testing::random_kripke(rng, 3, {"p", "q"});
    const auto f = testing::random_qctl(rng, shape);
    const auto lhs = qctl::neg(qctl::exists("P1", qctl::neg(f)));
    const auto rhs = qctl::forall("P1", f);
    for (StateId q = 0; q < k.size(); ++q)
      EXPECT_EQ(check_structure(k, q, lhs), check_structure(k, q, rhs)) << qctl::print(f);
  }
}

TEST(Structure, UnusedQuantifierIsNoOp) {
  testing::Rng rng(33);
  testing::QctlShape shape;
  for (int i = 0; i < 50; ++i) {
    const auto k = testing::random_kripke(rng, 3, {"p", "q"});
    const auto f = testing::random_qctl(rng, shape);
    for (StateId q = 0; q < k.size(); ++q) {
      const bool v = check_structure(k, q, f);
      EXPECT_EQ(check_structure(k, q, qctl::exists("Z", f)), v);
      EXPECT_EQ(check_structure(k, q, qctl::forall("Z", f)), v);
    }
  }
}

TEST(Structure, AgreesWithNaiveOracleOnQuantifiedFormulas) {
  testing::Rng rng(34);
  testing::QctlShape shape;
  shape.quantifier_depth = 2;
  int quantified = 0;
  for (int i = 0; i < 60; ++i) {
    const auto k = testing::random_kripke(rng, 3, {"p", "q"});
    const auto f = testing::random_qctl(rng, shape);
    quantified += qctl::has_quantifiers(f);
    testing::LassoOracle oracle(k, 12);
    for (StateId q = 0; q < k.size(); ++q)
      EXPECT_EQ(check_structure(k, q, f), oracle.check(q, f)) << qctl::print(f) << " at " << q;
  }
  EXPECT_GT(quantified, 15);
}

TEST(CtlStar, AgreesWithLassoOracle) {
  testing::Rng rng(35);
  for (int i = 0; i < 50; ++i) {
    const auto k = testing::random_kripke(rng, 3, {"p", "q"});
    const auto psi = testing::random_ltl(rng, {"p", "q"}, 3);
    testing::LassoOracle oracle(k, 12);
    for (const auto& f : {qctl::epath(psi), qctl::apath(psi)})
      for (StateId q = 0; q < k.size(); ++q)
        EXPECT_EQ(check_ctlstar(k, q, f), oracle.check(q, f)) << qctl::print(f) << " at " << q;
  }
}

TEST(CtlStar, RejectsQuantifiers) {
  const auto k = make({{"p"}}, {{0}});
  try {
    check_ctlstar(k, 0, parse("exists P. P"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EngineMismatch);
  }
}

TEST(Structure, Errors) {
  const auto k = make({{"p"}}, {{0}});
  auto kind = [&](const qctl::Formula& f, QctlOptions o = {}) {
    try {
      QctlChecker(k, o).check(0, f);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  EXPECT_EQ(kind(parse("r")), ErrorKind::UnknownProp);
  EXPECT_EQ(kind(qctl::next(qctl::prop("p"))), ErrorKind::Stratification);
  QctlOptions shallow;
  shallow.max_quantifier_depth = 1;
  EXPECT_EQ(kind(parse("exists P. forall R. (P | R)"), shallow), ErrorKind::ResourceLimit);
  // A chain of one quantifier kind is one block.
  EXPECT_NE(kind(parse("exists P. exists R. (P & R)"), shallow), ErrorKind::ResourceLimit);
}

TEST(Structure, ShadowingBindsInnermost) {
  const auto k = make({{"p"}, {}}, {{1}, {1}});
  EXPECT_TRUE(check_structure(k, 0, parse("exists p. !p")));
  EXPECT_TRUE(check_structure(k, 0, parse("p & exists p. !p")));
  EXPECT_FALSE(check_structure(k, 0, parse("exists P. (P & forall P. P)")));
}

TEST(Structure, DeterministicWitness) {
  testing::Rng rng(36);
  testing::QctlShape shape;
  shape.quantifier_depth = 1;
  int witnessed = 0;
  for (int i = 0; i < 40; ++i) {
    const auto k = testing::random_kripke(rng, 4, {"p", "q"});
    const auto body = testing::random_qctl(rng, {.props = {"p", "q", "P1"}, .allow_quantifiers = false});
    const auto f = qctl::exists("P1", body);
    QctlChecker a(k), b(k);
    const bool va = a.check(0, f), vb = b.check(0, f);
    ASSERT_EQ(va, vb);
    ASSERT_EQ(a.witness().size(), b.witness().size());
    for (std::size_t j = 0; j < a.witness().size(); ++j) {
      EXPECT_EQ(a.witness()[j].prop, b.witness()[j].prop);
      EXPECT_EQ(a.witness()[j].states, b.witness()[j].states);
    }
    if (!va) continue;
    ASSERT_EQ(a.witness().size(), 1u);
    ++witnessed;
    // The witness labeling satisfies the body.
    KripkeStructure relabeled = k;
    relabeled.props.push_back("P1");
    for (StateId s : a.witness()[0].states) relabeled.labels[s].insert("P1");
    EXPECT_TRUE(check_structure(relabeled, 0, body)) << qctl::print(f);
  }
  EXPECT_GT(witnessed, 5);
}

}  // namespace
}  // namespace atlsc
