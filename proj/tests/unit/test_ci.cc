// Copyright 2026 The Entropic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "entropic/ci.h"
#include "entropic/distribution.h"
#include "entropic/errors.h"
#include "entropic/shannon.h"

namespace entropic {
namespace {

const std::vector<std::string> kNames = {"X", "Y", "Z", "W"};

CIStatement S(const char* text) { return ParseCI(text, kNames); }

Distribution Xor() {
  return Distribution::FromCounts({2, 2, 2}, {1, 0, 0, 1, 0, 1, 1, 0}, 4);
}

TEST(CIStatementTest, ParseForms) {
  const CIStatement s = S("X _|_ YW | Z");
  EXPECT_EQ(s.y, VarSet(0b0001));
  EXPECT_EQ(s.z, VarSet(0b1010));
  EXPECT_EQ(s.x, VarSet(0b0100));
  EXPECT_EQ(S("(X ⫫ YW | Z)"), s);
  EXPECT_EQ(S("X _||_ YW | Z"), s);
  EXPECT_EQ(FormatCI(s, kNames), "X _|_ YW | Z");
  EXPECT_THROW(S("X _|_ Y | X").Validate(4), InvalidArgument);
  EXPECT_THROW(S("X Y"), Error);
  // Y and Z may coincide: (X _|_ X) says X is constant.
  EXPECT_NO_THROW(S("X _|_ X").Validate(4));
}

TEST(CIStatementTest, ToClauseShape) {
  const CIStatement given[] = {S("X _|_ Y")};
  const Clause c = ToClause(3, given, S("X _|_ Y | Z"));
  ASSERT_EQ(c.antecedents.size(), 2u);
  EXPECT_EQ(c.antecedents[0], LinExpr::MutualInformation(3, VarSet(1), VarSet(2)));
  EXPECT_EQ(c.antecedents[1], -c.antecedents[0]);
  ASSERT_EQ(c.consequents.size(), 1u);
  EXPECT_EQ(c.consequents[0],
            -LinExpr::MutualInformation(3, VarSet(1), VarSet(2), VarSet(4)));
}

struct Axiom {
  const char* name;
  std::vector<const char*> given;
  const char* goal;
};

TEST(ProveCITest, SemigraphoidAxioms) {
  const Axiom axioms[] = {
      {"contraction", {"X _|_ Y | Z", "X _|_ W | YZ"}, "X _|_ YW | Z"},
      {"weak union", {"X _|_ YW | Z"}, "X _|_ Y | ZW"},
      {"decomposition", {"X _|_ YW | Z"}, "X _|_ Y | Z"},
      {"symmetry", {"X _|_ Y | Z"}, "Y _|_ X | Z"},
  };
  const GeneratorSet gens = GeneratorSet::Elemental(4);
  for (const Axiom& a : axioms) {
    std::vector<CIStatement> given;
    for (const char* g : a.given) given.push_back(S(g));
    const CIStatement goal = S(a.goal);
    const ProveResult r = ProveCI(4, given, goal, gens);
    ASSERT_TRUE(r.provable) << a.name;
    const Clause c = ToClause(4, given, goal);
    EXPECT_TRUE(Residual(*r.certificate, c.consequents[0], gens, c.antecedents)
                    .is_zero())
        << a.name;
  }
}

TEST(ProveCITest, MarginalIndependenceDoesNotGiveConditional) {
  const CIStatement given[] = {S("X _|_ Y")};
  EXPECT_FALSE(
      ProveCI(3, given, S("X _|_ Y | Z"), GeneratorSet::Elemental(3)).provable);
}

TEST(DeltaTest, SystemShape) {
  const CIStatement given[] = {S("X _|_ Y")};
  const PolySystem sys = BuildDelta(3, given, S("X _|_ Y | Z"), 2);
  EXPECT_EQ(sys.num_atoms(), 8u);
  // One equality per (x, y) value pair for the premise, one per (x, y, z)
  // for the conclusion.
  EXPECT_EQ(sys.antecedent_equalities.size(), 4u);
  EXPECT_EQ(sys.consequent_disjuncts.size(), 8u);
}

TEST(DeltaTest, XorSolvesAndPointMassDoesNot) {
  const CIStatement given[] = {S("X _|_ Y")};
  const CIStatement goal = S("X _|_ Y | Z");
  EXPECT_TRUE(SolvesDelta(BuildDelta(3, given, goal, 2), Xor()));
  const PolySystem one = BuildDelta(3, given, goal, 1);
  EXPECT_EQ(one.num_atoms(), 1u);
  EXPECT_FALSE(SolvesDelta(one, Distribution::FromCounts({1, 1, 1}, {1}, 1)));
  EXPECT_FALSE(FalsifyCI(3, given, goal, {1, 4}).has_value());
}

TEST(FalsifyTest, ConditionalIndependenceCounterexample) {
  const CIStatement given[] = {S("X _|_ Y")};
  const CIStatement goal = S("X _|_ Y | Z");
  const auto cx = FalsifyCI(3, given, goal, {2, 4});
  ASSERT_TRUE(cx.has_value());
  EXPECT_TRUE(SolvesDelta(BuildDelta(3, given, goal, 2), *cx->distribution));
  // Frozen: the canonical order reaches Z = NAND(X, Y) before XOR.
  EXPECT_EQ(*cx->distribution,
            Distribution::FromCounts({2, 2, 2}, {0, 1, 0, 1, 0, 1, 1, 0}, 4));
  for (int w : {2, 4}) {
    EXPECT_EQ(FalsifyCI(3, given, goal, {2, 4}, w)->index, cx->index);
  }
}

TEST(FalsifyTest, ValidAxiomsHaveNoCounterexample) {
  const CIStatement wu[] = {S("X _|_ YW | Z")};
  EXPECT_FALSE(FalsifyCI(4, wu, S("X _|_ Y | ZW"), {2, 3}).has_value());
  const CIStatement contraction[] = {S("X _|_ Y | Z"), S("X _|_ W | YZ")};
  EXPECT_FALSE(
      FalsifyCI(4, contraction, S("X _|_ YW | Z"), {2, 2}).has_value());
}

TEST(FalsifyTest, ConstantVariable) {
  const auto cx = FalsifyCI(1, {}, ParseCI("X _|_ X", {"X"}), {2, 2});
  ASSERT_TRUE(cx.has_value());
  EXPECT_EQ(*cx->distribution, Distribution::FromCounts({2}, {1, 1}, 2));
}

TEST(ExportTest, HeaderRoundTrip) {
  const CIStatement given[] = {S("X _|_ Y")};
  const PolySystem sys = BuildDelta(3, given, S("X _|_ Y | Z"), 2);
  const std::string smt = ExportDelta(sys);
  const DeltaHeader h = ParseDeltaHeader(smt);
  EXPECT_EQ(h, (DeltaHeader{3, 2, 8, 4, 8}));
  EXPECT_NE(smt.find("(set-logic QF_NRA)"), std::string::npos);
  EXPECT_NE(smt.find("(check-sat)"), std::string::npos);
  EXPECT_THROW(ParseDeltaHeader("(check-sat)"), FormatError);

  const std::string one = ExportDelta(BuildDelta(3, given, S("X _|_ Y | Z"), 1));
  EXPECT_NE(one.find("(declare-fun p_0 () Real)"), std::string::npos);
  EXPECT_EQ(one.find("p_1"), std::string::npos);
}

}  // namespace
}  // namespace entropic
