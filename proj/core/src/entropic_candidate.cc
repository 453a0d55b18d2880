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

#include "entropic/entropic_candidate.h"

#include <string>

#include "entropic/errors.h"

namespace entropic {

EntropicCandidate::EntropicCandidate(int n) : n_(n) {
  if (n < 0 || n > kMaxVariables) {
    throw InvalidArgument("variable count out of range: " + std::to_string(n));
  }
  values_.resize(size_t{1} << n);
}

void EntropicCandidate::Set(VarSet s, LogLinValue value) {
  if (s.Span() > n_) throw DimensionError("subset outside the candidate");
  if (s.empty() && !value.is_zero()) {
    throw InvalidArgument("h(empty set) must be zero");
  }
  values_[s.index()] = std::move(value);
}

LogLinValue Eval(const LinExpr& c, const EntropicCandidate& h) {
  if (c.n() != h.n()) {
    throw DimensionError("expression over " + std::to_string(c.n()) +
                         " variables evaluated on a candidate over " +
                         std::to_string(h.n()));
  }
  LogLinValue sum;
  for (const auto& [s, coeff] : c.terms()) {
    const LogLinValue& v = h.at(s);
    for (const auto& [p, k] : v.prime_coefficients()) {
      sum.AddPrime(p, coeff * k);
    }
  }
  return sum;
}

ClauseTrace TraceClause(const Clause& clause, const EntropicCandidate& h) {
  ClauseTrace t;
  bool antecedent_fails = false;
  bool consequent_holds = false;
  for (const LinExpr& c : clause.antecedents) {
    int s = Eval(c, h).Sign();
    t.antecedent_signs.push_back(s);
    antecedent_fails |= s < 0;
  }
  for (const LinExpr& d : clause.consequents) {
    int s = Eval(d, h).Sign();
    t.consequent_signs.push_back(s);
    consequent_holds |= s >= 0;
  }
  t.holds = antecedent_fails || consequent_holds;
  return t;
}

bool Holds(const Clause& clause, const EntropicCandidate& h) {
  for (const LinExpr& d : clause.consequents) {
    if (Eval(d, h).Sign() >= 0) return true;
  }
  for (const LinExpr& c : clause.antecedents) {
    if (Eval(c, h).Sign() < 0) return true;
  }
  return false;
}

int FirstFailingClause(const BooleanConstraint& constraint,
                       const EntropicCandidate& h) {
  for (size_t i = 0; i < constraint.clauses.size(); ++i) {
    if (!Holds(constraint.clauses[i], h)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace entropic
