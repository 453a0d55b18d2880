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

#ifndef ENTROPIC_LIN_EXPR_H_
#define ENTROPIC_LIN_EXPR_H_

#include <map>

#include "entropic/rational.h"
#include "entropic/varset.h"

namespace entropic {

// A rational linear functional c over entropy coordinates: c . h =
// sum_alpha c_alpha h(alpha). The coefficient on the empty set is always
// zero because h(empty) = 0; zero coefficients are never stored, so two
// expressions represent the same functional iff they compare equal.
class LinExpr {
 public:
  LinExpr() = default;
  explicit LinExpr(int n);

  // h(s).
  static LinExpr Entropy(int n, VarSet s);
  // h(Y | X) = h(XY) - h(X).
  static LinExpr ConditionalEntropy(int n, VarSet y, VarSet x);
  // I(Y; Z | X) = h(XY) + h(XZ) - h(XYZ) - h(X).
  static LinExpr MutualInformation(int n, VarSet y, VarSet z,
                                   VarSet x = VarSet());

  int n() const { return n_; }
  const std::map<VarSet, Rational>& terms() const { return terms_; }
  Rational coeff(VarSet s) const;
  bool is_zero() const { return terms_.empty(); }

  // Adds `value` to the coefficient of `s`. Contributions on the empty set
  // are dropped.
  LinExpr& Add(VarSet s, const Rational& value);

  LinExpr& operator+=(const LinExpr& other);
  LinExpr& operator-=(const LinExpr& other);
  LinExpr& operator*=(const Rational& scale);

  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, const Rational& s) { return a *= s; }
  friend LinExpr operator*(const Rational& s, LinExpr a) { return a *= s; }
  LinExpr operator-() const;

  bool operator==(const LinExpr& other) const = default;

  // c . h^(j), the value on the basic modular function of variable j:
  // the sum of coefficients over sets containing j.
  Rational OnBasicModular(int j) const;

 private:
  void CheckSameDimension(const LinExpr& other) const;

  int n_ = 0;
  std::map<VarSet, Rational> terms_;
};

}  // namespace entropic

#endif  // ENTROPIC_LIN_EXPR_H_
