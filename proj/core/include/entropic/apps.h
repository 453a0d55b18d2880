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

#ifndef ENTROPIC_APPS_H_
#define ENTROPIC_APPS_H_

#include <string>
#include <string_view>
#include <vector>

#include "entropic/clause.h"
#include "entropic/lin_expr.h"
#include "entropic/search.h"
#include "entropic/varset.h"

namespace entropic {

// Over A, B, C, D (indices 0..3): the left side minus the right side of
//   I(C;D|A) + (k+3)/2 I(C;D|B) + I(A;B) + (k-1)/2 I(B;C|D) + 1/k I(B;D|C)
//     >= I(C;D),
// a valid non-Shannon inequality for every k >= 1.
LinExpr MatusExpr(int k);
std::string MatusSource(int k);

// q (I(C;D|A) + I(C;D|B) + I(A;B) + I(B;C|D)) + 1/p h(ABCD) - I(C;D).
LinExpr TightFamilyExpr(int p, int q);
// q = max(ceil((p+3)/2), 1), the choice that makes the Matus k = p
// instance sufficient.
int TightFamilyQ(int p);

// Participants X_1..X_m (indices 0..m-1) and the secret X_{m+1}. `access`
// lists the qualified sets over participant indices and must be nonempty
// and closed under supersets. Antecedents: h(X_s | X_F) = 0 for F in the
// access structure and I(X_s; X_F) = 0 for nonempty F outside it, each
// expanded into the pair e >= 0, -e >= 0. Consequents: -h(X_s) >= 0 (the
// secret is trivial) and h(X_i) - ell h(X_s) >= 0 for every participant.
BooleanConstraint SecretSharingConstraint(int participants,
                                          const std::vector<VarSet>& access,
                                          const Rational& ell);
// The superset closure of `minimal` within the participants.
std::vector<VarSet> UpwardClosure(int participants,
                                  const std::vector<VarSet>& minimal);

// What the tools are expected to conclude on a fixture at the elemental
// generator set and small budgets.
enum class Expectation {
  kProvable,          // every clause provable (antecedents as columns)
  kNotProvable,       // some clause not provable at the elemental set
  kRefutable,         // the refuter finds a counterexample
  kMaxValid,          // max_to_linear returns Valid
  kSlackProvable,     // reduce_slack succeeds
  kTightProvable,     // reduce_tight succeeds at the default schedule
};
std::string_view ToString(Expectation e);
Expectation ParseExpectation(std::string_view s);

struct CorpusEntry {
  std::string name;
  std::string summary;
  std::string source;  // .iic text
  Expectation expected;
  // Expected lambda for the max and slack regimes, as "num/den" strings.
  std::vector<std::string> lambda;

  BooleanConstraint Parse() const;
};

const std::vector<CorpusEntry>& Corpus();
// nullptr when absent.
const CorpusEntry* FindCorpusEntry(std::string_view name);

// Runs the tool matching the fixture's expectation at the elemental
// generator set and reports what it concluded.
struct FixtureCheck {
  bool matched = false;
  std::string observed;
};
FixtureCheck CheckFixture(const CorpusEntry& entry,
                          const SearchBudget& budget = {}, int workers = 1);

// manifest.json content for the corpus directory.
std::string CorpusManifest();

// The corpus directory: $ENTROPIC_CORPUS when set, else `fallback`.
std::string CorpusDirectory(const std::string& fallback = "corpus");

}  // namespace entropic

#endif  // ENTROPIC_APPS_H_
