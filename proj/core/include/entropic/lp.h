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

#ifndef ENTROPIC_LP_H_
#define ENTROPIC_LP_H_

#include <utility>
#include <vector>

#include "entropic/rational.h"

namespace entropic {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  // Primal values, one per column; filled when optimal.
  std::vector<Rational> x;
  // When infeasible: y with y^T A >= 0 componentwise and y^T b < 0, which
  // proves that A x = b, x >= 0 has no solution.
  std::vector<Rational> farkas;
};

// Minimizes cost . x subject to A x = b, x >= 0, exactly. Two-phase dense
// tableau simplex with Bland's rule, so it always terminates.
LpSolution SolveStandardForm(const std::vector<std::vector<Rational>>& a,
                             const std::vector<Rational>& b,
                             const std::vector<Rational>& cost);

// Convenience front end over nonnegative variables with <=, =, >= rows.
class LinearProgram {
 public:
  enum class Sense { kLessEqual, kEqual, kGreaterEqual };
  using Row = std::vector<std::pair<int, Rational>>;

  // Returns the new variable's index; every variable is >= 0.
  int AddVariable(const Rational& cost = 0);
  void AddConstraint(Row row, Sense sense, const Rational& rhs);
  int num_variables() const { return static_cast<int>(cost_.size()); }

  // x holds only the declared variables; farkas is indexed by constraint.
  LpSolution Minimize() const;

 private:
  struct Constraint {
    Row row;
    Sense sense;
    Rational rhs;
  };
  std::vector<Rational> cost_;
  std::vector<Constraint> constraints_;
};

}  // namespace entropic

#endif  // ENTROPIC_LP_H_
