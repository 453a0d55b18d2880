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

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "entropic/distribution.h"
#include "entropic/errors.h"
#include "entropic/recognizer.h"
#include "entropic/shannon.h"

namespace entropic {
namespace {

CandidateRepr R(const char* text) {
  CandidateRepr r = ParseCandidateRepr(text);
  r.Validate();
  return r;
}

TEST(CandidateReprTest, ParseValidateRoundTrip) {
  const CandidateRepr r = R("vars X Y\nX 2 1 1\nY 2 1 1\nXY 4 1 1 # two bits\n");
  EXPECT_EQ(r.n, 2);
  EXPECT_EQ(r.ToCandidate().at(VarSet(3)), LogLinValue::FromRational(2));
  EXPECT_EQ(ParseCandidateRepr(FormatCandidateRepr(r)).entries, r.entries);
  EXPECT_THROW(R("vars X Y\nX 2 1 1\nY 2 1 1\n"), FormatError);
  EXPECT_THROW(R("vars X\nX 2 1 0\n"), FormatError);
  EXPECT_THROW(R("vars X\nX 0 1 1\n"), FormatError);
  CandidateRepr built = r;
  built.entries.erase(VarSet(3));
  EXPECT_THROW(built.Validate(), InvalidArgument);
  built = r;
  built.entries[VarSet(1)].c = 0;
  EXPECT_THROW(built.Validate(), InvalidArgument);
  EXPECT_THROW(ParseCandidateRepr("vars X\nQ 2 1 1\n"), Error);
}

TEST(CandidateReprTest, FromCandidateIsExact) {
  const Distribution d({3}, {Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  const EntropicCandidate h = EntropicVector(d);
  const CandidateRepr r = CandidateRepr::FromCandidate(h, {"X"});
  EXPECT_EQ(r.ToCandidate(), h);
}

TEST(CheckCandidateTest, DuplicateBitIsRealized) {
  const CandidateRepr r = R("vars X Y\nX 2 1 1\nY 2 1 1\nXY 2 1 1\n");
  const RecognitionResult res = CheckCandidate(r, GeneratorSet::Elemental(2));
  ASSERT_EQ(res.verdict, Recognition::kRealized);
  EXPECT_EQ(EntropicVector(*res.realization), r.ToCandidate());
}

TEST(CheckCandidateTest, SubadditivityViolationIsRejected) {
  const CandidateRepr r = R("vars X Y\nX 2 1 1\nY 2 1 1\nXY 8 1 1\n");
  const GeneratorSet gens = GeneratorSet::Elemental(2);
  const RecognitionResult res = CheckCandidate(r, gens);
  ASSERT_EQ(res.verdict, Recognition::kRejected);
  ASSERT_TRUE(res.violated_generator.has_value());
  const Generator& g = gens[*res.violated_generator];
  EXPECT_EQ(g.id, "sub[0,1|]");
  EXPECT_EQ(*res.violation, Eval(g.expr, r.ToCandidate()));
  EXPECT_EQ(res.violation->Sign(), -1);
}

TEST(CheckCandidateTest, ZeroVectorIsPointMass) {
  const CandidateRepr r = R("vars X Y\nX 1 1 1\nY 1 1 1\nXY 1 1 1\n");
  const RecognitionResult res = CheckCandidate(r, GeneratorSet::Elemental(2));
  ASSERT_EQ(res.verdict, Recognition::kRealized);
  EXPECT_EQ(res.realization->num_outcomes(), 1u);
}

TEST(CheckCandidateTest, HalfBitIsInconclusive) {
  const CandidateRepr r = R("vars X\nX 2 1 2\n");
  EXPECT_EQ(CheckCandidate(r, GeneratorSet::Elemental(1)).verdict,
            Recognition::kInconclusive);
}

TEST(CheckCandidateTest, BudgetInteriorVectorsAreRealized) {
  std::mt19937_64 rng(9);
  SearchBudget b;
  b.max_denominator = 3;
  const GeneratorSet gens = GeneratorSet::Elemental(2);
  for (int t = 0; t < 20; ++t) {
    const Distribution d = RandomDistribution(2, 2, 3, rng);
    const EntropicCandidate h = EntropicVector(d);
    const RecognitionResult res =
        CheckCandidate(CandidateRepr::FromCandidate(h, {"X", "Y"}), gens, b);
    ASSERT_EQ(res.verdict, Recognition::kRealized) << FormatDistribution(d);
    EXPECT_EQ(EntropicVector(*res.realization), h);
  }
}

}  // namespace
}  // namespace entropic
