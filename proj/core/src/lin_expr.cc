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

#include "entropic/lin_expr.h"

#include <string>

#include "entropic/errors.h"

namespace entropic {

LinExpr::LinExpr(int n) : n_(n) {
  if (n < 0 || n > kMaxVariables) {
    throw InvalidArgument("variable count out of range: " + std::to_string(n));
  }
}

LinExpr LinExpr::Entropy(int n, VarSet s) {
  LinExpr e(n);
  e.Add(s, 1);
  return e;
}

LinExpr LinExpr::ConditionalEntropy(int n, VarSet y, VarSet x) {
  LinExpr e(n);
  e.Add(x | y, 1);
  e.Add(x, -1);
  return e;
}

LinExpr LinExpr::MutualInformation(int n, VarSet y, VarSet z, VarSet x) {
  LinExpr e(n);
  e.Add(x | y, 1);
  e.Add(x | z, 1);
  e.Add(x | y | z, -1);
  e.Add(x, -1);
  return e;
}

Rational LinExpr::coeff(VarSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

LinExpr& LinExpr::Add(VarSet s, const Rational& value) {
  if (s.empty() || value == 0) return *this;
  if (s.Span() > n_) {
    throw DimensionError("subset mentions a variable beyond n=" +
                         std::to_string(n_));
  }
  auto [it, inserted] = terms_.try_emplace(s, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void LinExpr::CheckSameDimension(const LinExpr& other) const {
  if (other.n_ != n_) {
    throw DimensionError("linear expressions over " + std::to_string(n_) +
                         " and " + std::to_string(other.n_) + " variables");
  }
}

LinExpr& LinExpr::operator+=(const LinExpr& other) {
  CheckSameDimension(other);
  for (const auto& [s, c] : other.terms_) Add(s, c);
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& other) {
  CheckSameDimension(other);
  for (const auto& [s, c] : other.terms_) Add(s, -c);
  return *this;
}

LinExpr& LinExpr::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= scale;
  return *this;
}

LinExpr LinExpr::operator-() const {
  LinExpr out = *this;
  for (auto& [s, c] : out.terms_) c = -c;
  return out;
}

Rational LinExpr::OnBasicModular(int j) const {
  Rational sum = 0;
  for (const auto& [s, c] : terms_) {
    if (s.contains(j)) sum += c;
  }
  return sum;
}

}  // namespace entropic
