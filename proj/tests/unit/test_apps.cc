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

#include <cstdlib>
#include <set>
#include <string>

#include "gtest/gtest.h"
#include "entropic/apps.h"
#include "entropic/errors.h"
#include "entropic/json_io.h"
#include "entropic/parser.h"

namespace entropic {
namespace {

VarSet Set(std::initializer_list<int> members) {
  VarSet s;
  for (int i : members) s = s | VarSet::Singleton(i);
  return s;
}

TEST(MatusTest, CoefficientsAtKEqualsOne) {
  const int n = 4;
  const VarSet a = Set({0}), b = Set({1}), c = Set({2}), d = Set({3});
  const LinExpr want = LinExpr::MutualInformation(n, c, d, a) +
                       LinExpr::MutualInformation(n, c, d, b) * Rational(2) +
                       LinExpr::MutualInformation(n, a, b) +
                       LinExpr::MutualInformation(n, b, d, c) -
                       LinExpr::MutualInformation(n, c, d);
  EXPECT_EQ(MatusExpr(1), want);
  EXPECT_EQ(ParseConstraint(MatusSource(1)).clauses[0].consequents[0], want);
  // k = 3: (k+3)/2 = 3, (k-1)/2 = 1, 1/k = 1/3.
  const LinExpr k3 = LinExpr::MutualInformation(n, c, d, a) +
                     LinExpr::MutualInformation(n, c, d, b) * Rational(3) +
                     LinExpr::MutualInformation(n, a, b) +
                     LinExpr::MutualInformation(n, b, c, d) +
                     LinExpr::MutualInformation(n, b, d, c) * Rational(1, 3) -
                     LinExpr::MutualInformation(n, c, d);
  EXPECT_EQ(MatusExpr(3), k3);
}

TEST(TightFamilyTest, QFormula) {
  EXPECT_EQ(TightFamilyQ(1), 2);
  EXPECT_EQ(TightFamilyQ(2), 3);
  EXPECT_EQ(TightFamilyQ(3), 3);
  EXPECT_EQ(TightFamilyQ(4), 4);
}

TEST(CorpusTest, JoinBoundConditionalEntropyEncoding) {
  const BooleanConstraint c = FindCorpusEntry("fd_join_bound")->Parse();
  const LinExpr& e = c.clauses[0].consequents[0];
  // X, Y, Z, U are 0..3; h(X|YU) = h(XYU) - h(YU), h(U|XZ) likewise.
  const int n = 4;
  LinExpr want = LinExpr::Entropy(n, Set({0, 1})) +
                 LinExpr::Entropy(n, Set({1, 2})) +
                 LinExpr::Entropy(n, Set({2, 3})) +
                 LinExpr::Entropy(n, Set({0, 1, 3})) -
                 LinExpr::Entropy(n, Set({1, 3})) +
                 LinExpr::Entropy(n, Set({0, 2, 3})) -
                 LinExpr::Entropy(n, Set({0, 2})) -
                 LinExpr::Entropy(n, Set({0, 1, 2, 3})) * Rational(2);
  EXPECT_EQ(e, want);
}

TEST(CorpusTest, MaxSampleRowPresent) {
  const BooleanConstraint c = FindCorpusEntry("sample_maxiip")->Parse();
  ASSERT_EQ(c.clauses.size(), 1u);
  const Clause& cl = c.clauses[0];
  ASSERT_EQ(cl.consequents.size(), 3u);
  const LinExpr first = LinExpr::Entropy(3, Set({0, 1})) -
                        LinExpr::Entropy(3, Set({0, 1, 2})) * Rational(2, 3);
  EXPECT_EQ(cl.consequents[0], first);
}

TEST(CorpusTest, FixturesRoundTripAndNamesAreUnique) {
  std::set<std::string> names;
  for (const CorpusEntry& e : Corpus()) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    const BooleanConstraint c = e.Parse();
    const BooleanConstraint back = ParseConstraint(FormatConstraint(c));
    EXPECT_EQ(back.variable_names, c.variable_names) << e.name;
    ASSERT_EQ(back.clauses.size(), c.clauses.size()) << e.name;
    for (size_t i = 0; i < c.clauses.size(); ++i) {
      EXPECT_EQ(back.clauses[i].antecedents, c.clauses[i].antecedents);
      EXPECT_EQ(back.clauses[i].consequents, c.clauses[i].consequents);
    }
  }
  EXPECT_EQ(FindCorpusEntry("no_such_fixture"), nullptr);
}

TEST(CorpusTest, ExpectedVerdictsHold) {
  for (const CorpusEntry& e : Corpus()) {
    const FixtureCheck r = CheckFixture(e);
    EXPECT_TRUE(r.matched) << e.name << ": " << r.observed;
  }
}

TEST(CorpusTest, ManifestListsEveryFixture) {
  const Json m = Json::parse(CorpusManifest());
  EXPECT_EQ(m["format"], "entropic-corpus/1");
  ASSERT_EQ(m["fixtures"].size(), Corpus().size());
  for (size_t i = 0; i < Corpus().size(); ++i) {
    EXPECT_EQ(m["fixtures"][i]["name"], Corpus()[i].name);
    EXPECT_EQ(m["fixtures"][i]["file"], Corpus()[i].name + ".iic");
    EXPECT_EQ(ParseExpectation(m["fixtures"][i]["expected"].get<std::string>()),
              Corpus()[i].expected);
  }
}

TEST(CorpusTest, DirectoryFromEnvironment) {
  unsetenv("ENTROPIC_CORPUS");
  EXPECT_EQ(CorpusDirectory("fallback"), "fallback");
  setenv("ENTROPIC_CORPUS", "/tmp/fixtures", 1);
  EXPECT_EQ(CorpusDirectory("fallback"), "/tmp/fixtures");
  unsetenv("ENTROPIC_CORPUS");
}

TEST(SecretSharingTest, TwoOfTwoShape) {
  const BooleanConstraint c = SecretSharingConstraint(2, {Set({0, 1})}, 1);
  EXPECT_EQ(c.n, 3);
  EXPECT_EQ(c.variable_names, (std::vector<std::string>{"X1", "X2", "X3"}));
  ASSERT_EQ(c.clauses.size(), 1u);
  const Clause& cl = c.clauses[0];
  // h(X3|X1X2) = 0, I(X3;X1) = 0, I(X3;X2) = 0, each as two inequalities.
  ASSERT_EQ(cl.antecedents.size(), 6u);
  const VarSet s = Set({2});
  std::set<std::vector<std::pair<uint32_t, std::string>>> got, want;
  auto key = [](const LinExpr& e) {
    std::vector<std::pair<uint32_t, std::string>> k;
    for (const auto& [v, c] : e.terms()) k.push_back({v.index(), c.get_str()});
    return k;
  };
  for (const LinExpr& e : cl.antecedents) got.insert(key(e));
  for (const LinExpr& e : {LinExpr::ConditionalEntropy(3, s, Set({0, 1})),
                           LinExpr::MutualInformation(3, s, Set({0})),
                           LinExpr::MutualInformation(3, s, Set({1}))}) {
    want.insert(key(e));
    want.insert(key(-e));
  }
  EXPECT_EQ(got, want);
  ASSERT_EQ(cl.consequents.size(), 3u);
  EXPECT_EQ(cl.consequents[0], -LinExpr::Entropy(3, s));
  EXPECT_EQ(cl.consequents[1], LinExpr::Entropy(3, Set({0})) -
                                   LinExpr::Entropy(3, s));
}

TEST(SecretSharingTest, AccessStructureValidation) {
  EXPECT_THROW(SecretSharingConstraint(2, {}, 1), InvalidArgument);
  EXPECT_THROW(SecretSharingConstraint(2, {Set({0})}, 1), InvalidArgument);
  EXPECT_NO_THROW(
      SecretSharingConstraint(2, {Set({0}), Set({0, 1})}, Rational(1, 2)));
  EXPECT_EQ(UpwardClosure(3, {Set({0, 1})}),
            (std::vector<VarSet>{Set({0, 1}), Set({0, 1, 2})}));
}

}  // namespace
}  // namespace entropic
