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

#include <algorithm>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "entropic/apps.h"
#include "entropic/distribution.h"
#include "entropic/errors.h"
#include "entropic/lp.h"
#include "entropic/parser.h"
#include "entropic/shannon.h"

namespace entropic {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

TEST(LpTest, SmallOptimum) {
  // min -x - y s.t. x + 2y <= 4, 3x + y <= 6.
  LinearProgram lp;
  const int x = lp.AddVariable(-1), y = lp.AddVariable(-1);
  lp.AddConstraint({{x, 1}, {y, 2}}, LinearProgram::Sense::kLessEqual, 4);
  lp.AddConstraint({{x, 3}, {y, 1}}, LinearProgram::Sense::kLessEqual, 6);
  const LpSolution s = lp.Minimize();
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, Rational(-14, 5));
  EXPECT_EQ(s.x[x], Rational(8, 5));
  EXPECT_EQ(s.x[y], Rational(6, 5));
}

TEST(LpTest, InfeasibleCarriesFarkasVector) {
  const Matrix a = {{1, 1}, {1, -1}, {1, 0}};
  const std::vector<Rational> b = {2, 0, 3};
  const LpSolution s = SolveStandardForm(a, b, {0, 0});
  ASSERT_EQ(s.status, LpStatus::kInfeasible);
  ASSERT_EQ(s.farkas.size(), 3u);
  for (size_t j = 0; j < 2; ++j) {
    Rational col = 0;
    for (size_t i = 0; i < 3; ++i) col += s.farkas[i] * a[i][j];
    EXPECT_GE(col, 0);
  }
  Rational yb = 0;
  for (size_t i = 0; i < 3; ++i) yb += s.farkas[i] * b[i];
  EXPECT_LT(yb, 0);
}

TEST(LpTest, UnboundedAndDegenerate) {
  LinearProgram lp;
  const int x = lp.AddVariable(-1);
  lp.AddConstraint({{x, 1}}, LinearProgram::Sense::kGreaterEqual, 1);
  EXPECT_EQ(lp.Minimize().status, LpStatus::kUnbounded);
  // Redundant equality rows.
  const LpSolution s = SolveStandardForm({{1, 1}, {2, 2}}, {1, 2}, {1, 0});
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, 0);
}

// Independent enumeration of the elemental schema.
std::set<std::vector<std::pair<uint32_t, Rational>>> Schema(int n) {
  std::set<std::vector<std::pair<uint32_t, Rational>>> out;
  auto key = [](const LinExpr& e) {
    std::vector<std::pair<uint32_t, Rational>> k;
    for (const auto& [s, c] : e.terms()) k.push_back({s.index(), c});
    return k;
  };
  const uint32_t full = (1u << n) - 1;
  for (int i = 0; i < n; ++i) {
    LinExpr e(n);
    e.Add(VarSet(full), 1);
    e.Add(VarSet(full & ~(1u << i)), -1);
    out.insert(key(e));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (uint32_t k = 0; k <= full; ++k) {
        if (k >> i & 1 || k >> j & 1) continue;
        LinExpr e(n);
        e.Add(VarSet(k | 1u << i), 1);
        e.Add(VarSet(k | 1u << j), 1);
        e.Add(VarSet(k | 1u << i | 1u << j), -1);
        e.Add(VarSet(k), -1);
        out.insert(key(e));
      }
    }
  }
  return out;
}

TEST(ElementalTest, CountsMatchIndependentEnumeration) {
  const size_t frozen[] = {0, 1, 3, 9, 28, 85, 246};
  for (int n = 1; n <= 6; ++n) {
    const GeneratorSet gens = GeneratorSet::Elemental(n);
    EXPECT_EQ(gens.size(), frozen[n]) << n;
    std::set<std::vector<std::pair<uint32_t, Rational>>> got;
    for (const Generator& g : gens.generators()) {
      std::vector<std::pair<uint32_t, Rational>> k;
      for (const auto& [s, c] : g.expr.terms()) k.push_back({s.index(), c});
      got.insert(k);
    }
    EXPECT_EQ(got, Schema(n)) << n;
  }
}

TEST(ElementalTest, IdsAndOrder) {
  const GeneratorSet gens = GeneratorSet::Elemental(3);
  EXPECT_EQ(gens[0].id, "mono[0]");
  EXPECT_EQ(gens[3].id, "sub[0,1|]");
  EXPECT_EQ(gens[4].id, "sub[0,1|2]");
  EXPECT_EQ(gens[8].id, "sub[1,2|0]");
  EXPECT_EQ(gens[8].kind, GeneratorKind::kSubmodularity);
}

TEST(ProveTest, JoinBoundAndKrSumVerify) {
  for (const char* name : {"fd_join_bound", "kr_sum", "agm_triangle", "sample_iip"}) {
    const BooleanConstraint c = FindCorpusEntry(name)->Parse();
    const GeneratorSet gens = GeneratorSet::Elemental(c.n);
    const LinExpr& target = c.clauses[0].consequents[0];
    const ProveResult r = Prove(target, gens);
    ASSERT_TRUE(r.provable) << name;
    EXPECT_TRUE(Verify(*r.certificate, target, gens)) << name;
    EXPECT_TRUE(Residual(*r.certificate, target, gens).is_zero()) << name;
    EXPECT_TRUE(r.certificate->trusted.empty());
  }
}

TEST(ProveTest, MatusNotProvableWithSeparatingVector) {
  for (int k = 1; k <= 3; ++k) {
    const LinExpr c = MatusExpr(k);
    const GeneratorSet gens = GeneratorSet::Elemental(4);
    const ProveResult r = Prove(c, gens);
    ASSERT_FALSE(r.provable) << k;
    ASSERT_EQ(r.separating_vector.size(), 16u);
    EXPECT_EQ(r.separating_vector[0], 0);
    for (const Generator& g : gens.generators()) {
      EXPECT_GE(DotDense(g.expr, r.separating_vector), 0) << g.id;
    }
    EXPECT_LT(DotDense(c, r.separating_vector), 0);
  }
}

TEST(ProveTest, UserValidGeneratorIsCited) {
  GeneratorSet gens = GeneratorSet::Elemental(4);
  gens.AddUserValid(MatusExpr(1), "matus k=1");
  EXPECT_EQ(gens[gens.size() - 1].id, "user[0]");
  const ProveResult r = Prove(MatusExpr(1) * Rational(2), gens);
  ASSERT_TRUE(r.provable);
  EXPECT_EQ(r.certificate->trusted, std::vector<std::string>{"matus k=1"});
  EXPECT_TRUE(Verify(*r.certificate, MatusExpr(1) * Rational(2), gens));
}

TEST(ProveTest, ConditionalWithAntecedents) {
  const BooleanConstraint c = FindCorpusEntry("sample_ci")->Parse();
  const GeneratorSet gens = GeneratorSet::Elemental(3);
  for (const Clause& cl : c.clauses) {
    const ProveResult r = Prove(cl.consequents[0], gens, cl.antecedents);
    ASSERT_TRUE(r.provable);
    EXPECT_TRUE(Verify(*r.certificate, cl.consequents[0], gens, cl.antecedents));
  }
}

TEST(VerifyTest, RejectsTamperedCertificates) {
  const BooleanConstraint c = FindCorpusEntry("fd_join_bound")->Parse();
  const GeneratorSet gens = GeneratorSet::Elemental(4);
  const LinExpr& target = c.clauses[0].consequents[0];
  ProofCertificate cert = *Prove(target, gens).certificate;
  auto nz = std::find_if(cert.generator_multipliers.begin(),
                         cert.generator_multipliers.end(),
                         [](const Rational& r) { return r != 0; });
  ASSERT_NE(nz, cert.generator_multipliers.end());
  ProofCertificate bumped = cert;
  bumped.generator_multipliers[nz - cert.generator_multipliers.begin()] += 1;
  EXPECT_FALSE(Verify(bumped, target, gens));
  ProofCertificate negative = cert;
  negative.generator_multipliers[0] = -1;
  EXPECT_FALSE(Verify(negative, target, gens));
  ProofCertificate short_cert = cert;
  short_cert.generator_multipliers.pop_back();
  EXPECT_FALSE(Verify(short_cert, target, gens));
  EXPECT_THROW(Residual(short_cert, target, gens), DimensionError);
}

TEST(JointSlackTest, KrConditionalAntecedentsOnModularWitness) {
  const BooleanConstraint c = FindCorpusEntry("kr_conditional")->Parse();
  const auto& ants = c.clauses[0].antecedents;
  const SlackResult s = JointSlack(ants);
  ASSERT_TRUE(s.found);
  ASSERT_EQ(s.witness->source, CandidateSource::kModular);
  EXPECT_EQ(s.witness->weights,
            (std::vector<Rational>{Rational(2), Rational(0), Rational(1)}));
  for (const LinExpr& a : ants) {
    EXPECT_EQ(Eval(a, s.witness->h), LogLinValue::FromRational(1));
  }
}

TEST(JointSlackTest, TightPairHasNoSlack) {
  const LinExpr i = LinExpr::MutualInformation(2, VarSet(1), VarSet(2));
  const LinExpr pair[] = {i, -i};
  EXPECT_FALSE(JointSlack(pair).found);
}

TEST(TightnessTest, Classification) {
  const GeneratorSet gens = GeneratorSet::Elemental(2);
  const LinExpr i = LinExpr::MutualInformation(2, VarSet(1), VarSet(2));
  EXPECT_EQ(ClassifyTight(-i, gens).verdict, Tightness::kTight);
  const TightnessResult s = ClassifyTight(i, gens);
  EXPECT_EQ(s.verdict, Tightness::kSlack);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_EQ(Eval(i, s.witness->h).Sign(), 1);
}

}  // namespace
}  // namespace entropic
