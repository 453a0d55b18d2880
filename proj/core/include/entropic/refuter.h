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

#ifndef ENTROPIC_REFUTER_H_
#define ENTROPIC_REFUTER_H_

#include <optional>
#include <string>

#include "entropic/clause.h"
#include "entropic/search.h"

namespace entropic {

struct RefuteResult {
  bool found = false;
  SearchBudget budget;
  std::optional<Candidate> counterexample;
  // The first clause that fails on the counterexample and its signs.
  int clause_index = -1;
  ClauseTrace trace;
};

// First candidate of the refuter stream (distributions, then vector-space
// systems) on which some clause fails: every antecedent >= 0 and every
// consequent < 0. A counterexample refutes validity over entropic vectors;
// it says nothing about limits of them.
RefuteResult Refute(const BooleanConstraint& constraint,
                    const SearchBudget& budget);
// Same result for any worker count.
RefuteResult RefuteParallel(const BooleanConstraint& constraint,
                            const SearchBudget& budget, int workers);

// Deterministic JSON report; identical for every worker count.
std::string FormatRefuteReport(const BooleanConstraint& constraint,
                               const RefuteResult& r);

// The model file of a counterexample: a distribution or system file.
std::string FormatCounterexampleFile(const Candidate& c);

}  // namespace entropic

#endif  // ENTROPIC_REFUTER_H_
