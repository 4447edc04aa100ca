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
#include "support/generators.hpp"

namespace atlsc {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Io;
}

const std::vector<std::string> kAgents{"a1", "a2"};

TEST(AtlParse, Examples) {
  const auto f = atl::parse("<<a1>> F f");
  ASSERT_EQ(f->kind, atl::Kind::StratQ);
  EXPECT_EQ(f->coalition, Coalition{"a1"});
  EXPECT_EQ(f->mode, StrategyMode::Memoryful);
  EXPECT_TRUE(atl::equal(f->child(), atl::eventually(atl::prop("f"))));

  const auto p = atl::parse("p");
  EXPECT_EQ(p->kind, atl::Kind::Prop);
  EXPECT_EQ(p->prop, "p");

  const auto m = atl::parse("<<a2, a1>>_0 X p");
  EXPECT_EQ(m->mode, StrategyMode::Memoryless);
  EXPECT_EQ(m->coalition, (Coalition{"a1", "a2"}));
}

TEST(AtlParse, StratificationErrors) {
  EXPECT_EQ(kind_of([] { atl::parse("F p"); }), ErrorKind::Stratification);
  EXPECT_EQ(kind_of([] { atl::parse("p U q"); }), ErrorKind::Stratification);
  EXPECT_EQ(kind_of([] { atl::parse("p & X q"); }), ErrorKind::Stratification);
  EXPECT_NO_THROW(atl::parse("<<a1>> (p & X q)"));
}

TEST(AtlParse, SyntaxErrorsCarryPosition) {
  try {
    atl::parse("<<a1>> F");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Syntax);
    EXPECT_EQ(std::string(e.what()).rfind("1:9:", 0), 0u) << e.what();
  }
  EXPECT_EQ(kind_of([] { atl::parse("<<a1 X p"); }), ErrorKind::Syntax);
  EXPECT_EQ(kind_of([] { atl::parse("p#x"); }), ErrorKind::Syntax);
}

TEST(AtlParse, Precedence) {
  EXPECT_TRUE(atl::equal(atl::parse("p & q | r -> s"),
                         atl::parse("((p & q) | r) -> s")));
  EXPECT_TRUE(atl::equal(atl::parse("<<a1>> (p U q U r)"),
                         atl::parse("<<a1>> (p U (q U r))")));
  EXPECT_TRUE(atl::equal(atl::parse("<<a1>> (!p U q & r)"),
                         atl::parse("<<a1>> ((!p U q) & r)")));
}

TEST(AtlParse, SugarExpands) {
  EXPECT_TRUE(atl::equal(atl::parse("[[a1]] G p"),
                         atl::box({"a1"}, StrategyMode::Memoryful, atl::always(atl::prop("p")))));
  const auto a = atl::parse("A X p");
  ASSERT_EQ(a->kind, atl::Kind::RelaxCo);
  EXPECT_TRUE(a->coalition.empty());
  EXPECT_EQ(a->child()->kind, atl::Kind::StratQ);
  EXPECT_EQ(a->child()->mode, StrategyMode::Memoryless);
  EXPECT_EQ(atl::print(atl::parse("[[a1]]_0 F p")), "[[a1]]_0 F p");
}

TEST(StratDepth, Examples) {
  EXPECT_EQ(atl::strat_depth(atl::parse("p")), 0);
  EXPECT_EQ(atl::strat_depth(atl::parse("<<a1>> F f")), 1);
  EXPECT_EQ(atl::strat_depth(atl::parse("<<a1>> X <<a2>> X (p & <<a1>> X q)")), 3);
  EXPECT_EQ(atl::strat_depth(atl::parse("<<a1>> X p & <<co a1>> X <<a2>> X q")), 2);
}

TEST(EliminateComplements, Examples) {
  EXPECT_TRUE(atl::equal(atl::eliminate_complements(atl::parse("<<co a1>> X p"), kAgents),
                         atl::parse("<<a2>> X p")));
  EXPECT_TRUE(atl::equal(atl::eliminate_complements(atl::parse("keep() <<>> X p"), kAgents),
                         atl::parse("relax(a1, a2) <<>> X p")));
  const auto plain = atl::parse("<<a1>>_0 (p U relax(a2) q)");
  EXPECT_TRUE(atl::equal(atl::eliminate_complements(plain, kAgents), plain));
  EXPECT_EQ(kind_of([] { atl::eliminate_complements(atl::parse("<<co a3>> X p"), kAgents); }),
            ErrorKind::UnknownAgent);
  EXPECT_EQ(kind_of([] { atl::eliminate_complements(atl::parse("<<a3>> X p"), kAgents); }),
            ErrorKind::UnknownAgent);
}

TEST(EliminateComplements, PropertyCoFreeAndDepthPreserving) {
  testing::Rng rng(21);
  testing::AtlShape shape;
  shape.allow_complements = true;
  shape.mixed_modes = true;
  int with_co = 0;
  for (int i = 0; i < 300; ++i) {
    const auto f = testing::random_atl(rng, shape);
    with_co += atl::has_complements(f);
    const auto g = atl::eliminate_complements(f, kAgents);
    EXPECT_FALSE(atl::has_complements(g)) << atl::print(f);
    EXPECT_EQ(atl::strat_depth(g), atl::strat_depth(f)) << atl::print(f);
  }
  EXPECT_GT(with_co, 30);
}

TEST(TranslateTb, Examples) {
  EXPECT_TRUE(atl::equal(atl::translate_formula_tb(atl::parse("<<a1>> X f"), 2),
                         atl::parse("<<a1>> X X f")));
  EXPECT_TRUE(atl::equal(atl::translate_formula_tb(atl::parse("<<a1>> F f"), 2),
                         atl::parse("<<a1>> ((mid | true) U (!mid & f))")));
  EXPECT_TRUE(atl::equal(atl::translate_formula_tb(atl::parse("p & relax(a2) q"), 3),
                         atl::parse("p & relax(a2) q")));
}

TEST(TranslateTb, PropertyDepths) {
  testing::Rng rng(22);
  testing::AtlShape shape;
  shape.mixed_modes = true;
  for (int i = 0; i < 300; ++i) {
    const auto f = testing::random_atl(rng, shape);
    for (std::size_t p : {1u, 2u, 3u}) {
      const auto g = atl::translate_formula_tb(f, p);
      EXPECT_EQ(atl::strat_depth(g), atl::strat_depth(f));
      EXPECT_EQ(atl::next_depth(g), static_cast<int>(p) * atl::next_depth(f)) << atl::print(f);
      EXPECT_TRUE(atl::is_state_formula(g));
    }
  }
}

TEST(AtlRoundTrip, RandomFormulas) {
  testing::Rng rng(23);
  testing::AtlShape shape;
  shape.allow_complements = true;
  shape.mixed_modes = true;
  for (int i = 0; i < 500; ++i) {
    const auto f = testing::random_atl(rng, shape);
    const std::string text = atl::print(f);
    const auto g = atl::parse(text);
    ASSERT_TRUE(atl::equal(f, g)) << text << "\n" << atl::print(g);
    EXPECT_EQ(atl::print(g), text);
  }
}

TEST(QctlParse, Examples) {
  const auto f = qctl::parse("exists Q. (Q & A G p)");
  ASSERT_EQ(f->kind, qctl::Kind::Exists);
  EXPECT_EQ(f->prop, "Q");
  EXPECT_TRUE(qctl::equal(f->child(), qctl::conj(qctl::prop("Q"), qctl::ag(qctl::prop("p")))));
  EXPECT_EQ(kind_of([] { qctl::parse("X p"); }), ErrorKind::Stratification);
  EXPECT_EQ(kind_of([] { qctl::parse("exists . p"); }), ErrorKind::Syntax);
  EXPECT_EQ(qctl::print(qctl::parse("forall P. E (p U P)")), "forall P. E (p U P)");
}

TEST(QctlProps, FreeAndBound) {
  const auto f = qctl::parse("p & exists P. (P | E X q) & P");
  EXPECT_EQ(qctl::free_props(f), (std::set<std::string>{"p", "q", "P"}));
  EXPECT_EQ(qctl::all_props(f), (std::set<std::string>{"p", "q", "P"}));
  const auto g = qctl::parse("exists P. exists P. P");
  EXPECT_TRUE(qctl::free_props(g).empty());
  EXPECT_EQ(qctl::quantifier_depth(g), 2);
  const std::string fresh = qctl::fresh_prop(f);
  EXPECT_FALSE(qctl::all_props(f).contains(fresh));
  EXPECT_NE(fresh.find('#'), std::string::npos);
}

TEST(QctlRoundTrip, RandomFormulas) {
  testing::Rng rng(24);
  testing::QctlShape shape;
  shape.quantifier_depth = 2;
  for (int i = 0; i < 500; ++i) {
    const auto f = testing::random_qctl(rng, shape);
    const std::string text = qctl::print(f);
    const auto g = qctl::parse(text);
    ASSERT_TRUE(qctl::equal(f, g)) << text << "\n" << qctl::print(g);
    EXPECT_EQ(qctl::print(g), text);
  }
}

TEST(Ex1, Shape) {
  const auto phi = qctl::parse("p & E X q");
  const auto e = qctl::ex1(phi);
  EXPECT_TRUE(qctl::is_state_formula(e));
  ASSERT_EQ(e->kind, qctl::Kind::And);
  EXPECT_TRUE(qctl::equal(e->child(0), qctl::ex(phi)));
  const auto& q = e->child(1);
  ASSERT_EQ(q->kind, qctl::Kind::Forall);
  EXPECT_FALSE(qctl::all_props(phi).contains(q->prop));
  EXPECT_EQ(qctl::free_props(e), qctl::free_props(phi));
}

TEST(Ex1, PropertyFreshAndStratified) {
  testing::Rng rng(25);
  testing::QctlShape shape;
  for (int i = 0; i < 200; ++i) {
    const auto phi = testing::random_qctl(rng, shape);
    const auto e = qctl::ex1(phi);
    EXPECT_TRUE(qctl::is_state_formula(e));
    EXPECT_FALSE(qctl::free_props(phi).contains(e->child(1)->prop));
    EXPECT_EQ(qctl::free_props(e), qctl::free_props(phi));
    EXPECT_TRUE(qctl::equal(qctl::parse(qctl::print(e)), e));
  }
}

}  // namespace
}  // namespace atlsc
