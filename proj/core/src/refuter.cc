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

#include "entropic/refuter.h"

#include "entropic/json_io.h"
#include "entropic/parser.h"

namespace entropic {

RefuteResult Refute(const BooleanConstraint& constraint,
                    const SearchBudget& budget) {
  return RefuteParallel(constraint, budget, 1);
}

RefuteResult RefuteParallel(const BooleanConstraint& constraint,
                            const SearchBudget& budget, int workers) {
  constraint.Validate();
  RefuteResult r;
  r.budget = budget;
  CandidateStream stream = CandidateStream::Refuter(constraint.n, budget);
  r.counterexample = SearchFirst(
      stream,
      [&](const EntropicCandidate& h) {
        return FirstFailingClause(constraint, h) >= 0;
      },
      workers);
  if (r.counterexample) {
    r.found = true;
    r.clause_index = FirstFailingClause(constraint, r.counterexample->h);
    r.trace = TraceClause(constraint.clauses[r.clause_index],
                          r.counterexample->h);
  }
  return r;
}

std::string FormatRefuteReport(const BooleanConstraint& constraint,
                               const RefuteResult& r) {
  Json j{{"command", "refute"},
         {"verdict", r.found ? "refuted" : "not-found"},
         {"budget", r.budget.ToString()}};
  if (r.found) {
    const Candidate& c = *r.counterexample;
    j["counterexample"] = ToJson(c);
    j["clause"] = r.clause_index;
    j["trace"] = ToJson(r.trace);
    const Clause& clause = constraint.clauses[r.clause_index];
    Json values = Json::array();
    for (const LinExpr& e : clause.consequents) {
      values.push_back(
          Json{{"expr", FormatExpr(e, constraint.variable_names)},
               {"value", Eval(e, c.h).ToString()}});
    }
    j["consequent_values"] = std::move(values);
  }
  return j.dump(2);
}

std::string FormatCounterexampleFile(const Candidate& c) {
  if (c.distribution) return FormatDistribution(*c.distribution);
  if (c.system) return FormatVectorSpaceSystem(*c.system);
  std::string out = "# modular weights\n";
  for (const Rational& w : c.weights) out += ToFractionString(w) + "\n";
  return out;
}

}  // namespace entropic
