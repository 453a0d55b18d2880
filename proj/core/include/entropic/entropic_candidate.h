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

#ifndef ENTROPIC_ENTROPIC_CANDIDATE_H_
#define ENTROPIC_ENTROPIC_CANDIDATE_H_

#include <vector>

#include "entropic/clause.h"
#include "entropic/lin_expr.h"
#include "entropic/loglin.h"
#include "entropic/varset.h"

namespace entropic {

// A vector h indexed by the subsets of [n] with exact log-linear values.
// h(empty) is zero by construction.
class EntropicCandidate {
 public:
  EntropicCandidate() = default;
  // The zero vector over n variables.
  explicit EntropicCandidate(int n);

  int n() const { return n_; }
  const LogLinValue& at(VarSet s) const { return values_.at(s.index()); }
  // Throws InvalidArgument when setting a nonzero value on the empty set.
  void Set(VarSet s, LogLinValue value);

  const std::vector<LogLinValue>& values() const { return values_; }
  bool operator==(const EntropicCandidate&) const = default;

 private:
  int n_ = 0;
  std::vector<LogLinValue> values_;
};

// c . h as an exact value. Throws DimensionError when n differs.
LogLinValue Eval(const LinExpr& c, const EntropicCandidate& h);

// Per-expression signs of a clause on one candidate.
struct ClauseTrace {
  std::vector<int> antecedent_signs;
  std::vector<int> consequent_signs;
  bool holds = true;
};

// True iff some antecedent is negative or some consequent is nonnegative.
bool Holds(const Clause& clause, const EntropicCandidate& h);
ClauseTrace TraceClause(const Clause& clause, const EntropicCandidate& h);

// Index of the first clause that fails on h, or -1.
int FirstFailingClause(const BooleanConstraint& constraint,
                       const EntropicCandidate& h);

}  // namespace entropic

#endif  // ENTROPIC_ENTROPIC_CANDIDATE_H_
