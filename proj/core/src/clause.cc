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

#include "entropic/clause.h"

#include "entropic/errors.h"

namespace entropic {

int Clause::n() const {
  if (!consequents.empty()) return consequents.front().n();
  if (!antecedents.empty()) return antecedents.front().n();
  return 0;
}

void Clause::Validate(int n) const {
  if (consequents.empty()) {
    throw InvalidArgument("clause has no consequent");
  }
  for (const auto* list : {&antecedents, &consequents}) {
    for (const LinExpr& e : *list) {
      if (e.n() != n) {
        throw DimensionError("clause expression over " +
                             std::to_string(e.n()) + " variables, expected " +
                             std::to_string(n));
      }
    }
  }
}

void BooleanConstraint::Validate() const {
  if (clauses.empty()) throw InvalidArgument("constraint has no clauses");
  if (static_cast<int>(variable_names.size()) != n) {
    throw DimensionError("variable name list does not match n");
  }
  for (const Clause& c : clauses) c.Validate(n);
}

std::vector<std::string> DefaultVariableNames(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('A' + i));
  return names;
}

}  // namespace entropic
