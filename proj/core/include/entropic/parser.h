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

#ifndef ENTROPIC_PARSER_H_
#define ENTROPIC_PARSER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "entropic/clause.h"
#include "entropic/errors.h"
#include "entropic/lin_expr.h"

namespace entropic {

// Byte range [start, end) into the parsed source plus the 1-based line and
// column of `start`.
struct SourceSpan {
  size_t start = 0;
  size_t end = 0;
  int line = 1;
  int column = 1;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span);
  const SourceSpan& span() const { return span_; }
  // The message without the location prefix.
  const std::string& detail() const { return detail_; }

 private:
  SourceSpan span_;
  std::string detail_;
};

// Parses a linear expression such as "2*H(XY) - H(X) - H(XYZ)" or
// "I(Y;Z|X) + 1/2 H(Y|X)" over the given ordered variables.
LinExpr ParseExpr(std::string_view text,
                  const std::vector<std::string>& variables);

// Parses a constraint in the .iic language (see docs/grammar.md). When the
// text carries no `vars` line, variables are numbered in order of first
// appearance.
BooleanConstraint ParseConstraint(std::string_view text);

// Same, with the variable order fixed by the caller.
BooleanConstraint ParseConstraint(std::string_view text,
                                  const std::vector<std::string>& variables);

// Parses a variable-set token sequence such as "XY" or "X1,X2".
VarSet ParseVarSet(std::string_view text,
                   const std::vector<std::string>& variables);

std::string FormatVarSet(VarSet s, const std::vector<std::string>& names);
std::string FormatExpr(const LinExpr& e, const std::vector<std::string>& names);
// Emits text that ParseConstraint maps back to an equal constraint.
std::string FormatConstraint(const BooleanConstraint& c);

}  // namespace entropic

#endif  // ENTROPIC_PARSER_H_
