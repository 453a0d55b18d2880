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

#ifndef ENTROPIC_CI_H_
#define ENTROPIC_CI_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entropic/clause.h"
#include "entropic/distribution.h"
#include "entropic/search.h"
#include "entropic/shannon.h"

namespace entropic {

// (Y independent of Z given X). Y and Z are nonempty and X is disjoint
// from both; Y and Z may overlap, so (Y ⫫ Y) expresses that Y is constant.
struct CIStatement {
  VarSet y;
  VarSet z;
  VarSet x;

  // Throws InvalidArgument on an empty side or an overlap with X.
  void Validate(int n) const;
  // I(Y;Z|X).
  LinExpr Information(int n) const;
  bool operator==(const CIStatement&) const = default;
};

// Parses "Y _|_ Z | X" with variable sets written as in H(...), e.g.
// "A _|_ BC | D" or "A _|_ B".
CIStatement ParseCI(std::string_view text,
                    const std::vector<std::string>& names);
std::string FormatCI(const CIStatement& s,
                     const std::vector<std::string>& names);

// Antecedents I_i >= 0 and -I_i >= 0 for each premise (in that order) and
// the single consequent -I(Y;Z|X) >= 0.
Clause ToClause(int n, std::span<const CIStatement> antecedents,
                const CIStatement& consequent);

// Tries to prove the implication from the premises and gens by one exact
// LP; the certificate's residual is zero when it succeeds.
ProveResult ProveCI(int n, std::span<const CIStatement> antecedents,
                    const CIStatement& consequent, const GeneratorSet& gens);

// A sum of atom probabilities; an empty list stands for the constant 1.
using AtomSum = std::vector<int>;

// lhs[0] * lhs[1] = rhs[0] * rhs[1], the factorization
// p(XYZ) p(X) = p(XY) p(XZ) at one value assignment.
struct ProductEquality {
  AtomSum lhs[2];
  AtomSum rhs[2];
};

// The polynomial system over the N^n atom probabilities p_0.. (outcomes in
// mixed radix, variable 0 most significant): p >= 0, sum p = 1, every
// premise equality, and at least one consequent equality violated.
struct PolySystem {
  int n = 0;
  int domain = 1;
  int num_antecedents = 0;
  std::vector<ProductEquality> antecedent_equalities;
  std::vector<ProductEquality> consequent_disjuncts;

  size_t num_atoms() const;
};

PolySystem BuildDelta(int n, std::span<const CIStatement> antecedents,
                      const CIStatement& consequent, int domain);

// Exact evaluation of one equality on a pmf of matching shape.
bool SatisfiesEquality(const ProductEquality& e, std::span<const Rational> p);
// True iff p satisfies every premise equality and violates some
// consequent equality, i.e. p is a solution of the system.
bool SolvesDelta(const PolySystem& sys, const Distribution& d);

struct FalsifyBudget {
  int max_domain = 2;
  int max_denominator = 4;
};

// First distribution (uniform domain N = 1..max_domain, denominators up to
// max_denominator, canonical order) satisfying the premises and violating
// the consequent, checked exactly.
std::optional<Candidate> FalsifyCI(int n,
                                   std::span<const CIStatement> antecedents,
                                   const CIStatement& consequent,
                                   const FalsifyBudget& budget,
                                   int workers = 1);

// SMT-LIB 2 (QF_NRA) text with unknowns p_0..p_{N^n-1}, preceded by a
// comment header "; entropic-delta n=.. N=.. atoms=.. antecedents=..
// disjuncts=..".
std::string ExportDelta(const PolySystem& sys);

struct DeltaHeader {
  int n = 0;
  int domain = 0;
  size_t atoms = 0;
  size_t antecedent_equalities = 0;
  size_t disjuncts = 0;
  bool operator==(const DeltaHeader&) const = default;
};
// Reads the header back; throws FormatError when it is missing.
DeltaHeader ParseDeltaHeader(std::string_view text);

}  // namespace entropic

#endif  // ENTROPIC_CI_H_
