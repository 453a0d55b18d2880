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

#include "gtest/gtest.h"
#include "entropic/apps.h"
#include "entropic/distribution.h"
#include "entropic/json_io.h"
#include "entropic/parser.h"
#include "entropic/shannon.h"

namespace entropic {
namespace {

TEST(JsonTest, RationalAndVarSet) {
  EXPECT_EQ(ToJson(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(RationalFromJson(Json("6/8")), Rational(3, 4));
  EXPECT_EQ(ToJson(VarSet(0b101)).dump(), "[0,2]");
  EXPECT_EQ(VarSetFromJson(Json::parse("[1,3]")), VarSet(0b1010));
}

TEST(JsonTest, ExpressionAndConstraintRoundTrip) {
  const BooleanConstraint c = FindCorpusEntry("kr_conditional")->Parse();
  const Json j = ToJson(c);
  const BooleanConstraint back = ConstraintFromJson(Json::parse(j.dump()));
  EXPECT_EQ(back.n, c.n);
  EXPECT_EQ(back.variable_names, c.variable_names);
  EXPECT_EQ(back.clauses[0].antecedents, c.clauses[0].antecedents);
  EXPECT_EQ(back.clauses[0].consequents, c.clauses[0].consequents);
  EXPECT_EQ(LinExprFromJson(ToJson(MatusExpr(2))), MatusExpr(2));
}

TEST(JsonTest, CandidateRoundTrip) {
  const Distribution d({3}, {Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  const EntropicCandidate h = EntropicVector(d);
  EXPECT_EQ(CandidateFromJson(ToJson(h)), h);
  const LogLinValue v = h.at(VarSet(1));
  EXPECT_EQ(LogLinValueFromJson(ToJson(v)), v);
}

TEST(JsonTest, CertificateListsNonzeroGenerators) {
  const BooleanConstraint c = FindCorpusEntry("kr_sum")->Parse();
  const GeneratorSet gens = GeneratorSet::Elemental(3);
  const ProveResult r = Prove(c.clauses[0].consequents[0], gens);
  ASSERT_TRUE(r.provable);
  const Json j = ToJson(*r.certificate, gens);
  size_t nonzero = 0;
  for (const Rational& m : r.certificate->generator_multipliers) {
    nonzero += m != 0;
  }
  EXPECT_EQ(j["generators"].size(), nonzero);
  for (const auto& [id, m] : j["generators"].items()) {
    EXPECT_GT(RationalFromJson(m), 0) << id;
  }
}

TEST(JsonTest, OutputIsByteStable) {
  const BooleanConstraint c = FindCorpusEntry("kopparty_rossman")->Parse();
  EXPECT_EQ(ToJson(c).dump(2), ToJson(c).dump(2));
  EXPECT_EQ(ToJson(c).dump(), ToJson(ConstraintFromJson(ToJson(c))).dump());
}

}  // namespace
}  // namespace entropic
