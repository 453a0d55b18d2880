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

#ifndef ENTROPIC_CLAUSE_H_
#define ENTROPIC_CLAUSE_H_

#include <string>
#include <vector>

#include "entropic/lin_expr.h"

namespace entropic {

// (c_1.h >= 0 and ... and c_k.h >= 0) => (d_1.h >= 0 or ... or d_l.h >= 0).
// k = 0 is the unconditional case; l >= 1 always.
struct Clause {
  std::vector<LinExpr> antecedents;
  std::vector<LinExpr> consequents;

  int n() const;
  bool is_unconditional() const { return antecedents.empty(); }
  // Throws InvalidArgument on an empty consequent list and DimensionError
  // when expressions disagree on n.
  void Validate(int n) const;
};

// A conjunction of clauses over shared variables. The constraint is valid
// iff every clause is.
struct BooleanConstraint {
  int n = 0;
  std::vector<std::string> variable_names;
  std::vector<Clause> clauses;

  void Validate() const;
};

// Default names for n variables: A, B, C, ...
std::vector<std::string> DefaultVariableNames(int n);

}  // namespace entropic

#endif  // ENTROPIC_CLAUSE_H_
