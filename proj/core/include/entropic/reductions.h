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

#ifndef ENTROPIC_REDUCTIONS_H_
#define ENTROPIC_REDUCTIONS_H_

#include <optional>
#include <span>
#include <vector>

#include "entropic/clause.h"
#include "entropic/lin_expr.h"
#include "entropic/search.h"
#include "entropic/shannon.h"

namespace entropic {

// c' = c - sum_i (c . h^(i)) h(X_i | X_rest), together with the checks
// c . h^(i). c . h >= 0 is valid iff every check is >= 0 and c' . h >= 0 is
// valid; c' is balanced.
struct ChanBalanced {
  LinExpr balanced;
  std::vector<Rational> checks;
};
ChanBalanced ChanBalance(const LinExpr& c);

// A_ij = d_i . h^(j) for D = {d_1..d_k}.
std::vector<std::vector<Rational>> ModularMatrix(std::span<const LinExpr> d);

// Rank by fraction-free (Bareiss) elimination after clearing each row's
// denominators.
int ExactRank(const std::vector<std::vector<Rational>>& m);

struct BalanceReport {
  std::vector<std::vector<Rational>> matrix;
  int rank = 0;
  // Nonnegative, nonzero, primitive integer weights w with A w = 0, i.e.
  // h^(*) = sum_j w_j h^(j) annihilates every d_i.
  std::optional<std::vector<Rational>> witness;
  bool group_balanced = false;
};
// Group balance: rank(A) = k - 1 and a witness exists.
BalanceReport GroupBalance(std::span<const LinExpr> d);

// The strongly balanced set d''_i = d'_i + (1/lambda_i)(n h(X_i|rest) -
// sum_j h(X_j|rest)) with d'_i the Chan-balanced d_i. Requires |D| = n
// variables and every lambda_i > 0; sum lambda_i d''_i = sum lambda_i d'_i.
std::vector<LinExpr> ToGroupBalanced(std::span<const LinExpr> d,
                                     std::span<const Rational> lambda);

// p-list and q bound for the tight regime.
struct TightSchedule {
  std::vector<int> p = {1, 2, 4, 8};
  int q_max = 64;
  // Largest sum of consequent weights tried when the clause has several
  // consequents.
  int max_grade = 3;
};
// Parses "p=1,2,4,8 qmax=64" (space or semicolon separated keys; a bare
// number after p= extends the list).
TightSchedule ParseSchedule(std::string_view text);

struct TightStep {
  int p = 0;
  int q = 0;
  // sum lambda_j d_j + (1/p) h([n]) - q sum c_i, proved unconditionally.
  LinExpr target;
  ProofCertificate certificate;
};

struct TightReduction {
  bool proved = false;
  // Weights on the consequents (all 1 for a single consequent).
  std::vector<Rational> lambda;
  // Antecedents used as tight conditions, and those dropped because they
  // are provable on their own (such as the c >= 0 half of c = 0).
  std::vector<size_t> tight_antecedents;
  std::vector<size_t> dropped_antecedents;
  // One step per p in the schedule when proved.
  std::vector<TightStep> steps;
};

// For each p, finds the least q <= q_max such that
//   sum_j lambda_j d_j + (1/p) h([n]) - q sum_i c_i >= 0
// is provable from gens. Throws InvalidArgument when a remaining antecedent
// is not provably tight.
TightReduction ReduceTight(const Clause& clause, const GeneratorSet& gens,
                           const TightSchedule& schedule = {});

struct SlackReduction {
  bool proved = false;
  std::vector<Rational> lambda;
  ProofCertificate certificate;
  // The modular or enumerated point where every antecedent is positive.
  std::optional<Candidate> slack_witness;
};

// c - sum lambda_i c_i = sum lambda_e g_e with exact lambda_i >= 0. Needs
// a single consequent; throws InvalidArgument when joint slack of the
// antecedents cannot be established within `budget`.
SlackReduction ReduceSlack(const Clause& clause, const GeneratorSet& gens,
                           const SearchBudget& budget = {});

struct MaxOptions {
  // Largest sum of lambda tried.
  int max_grade = 6;
  // Refuter candidates examined per epoch.
  uint64_t epoch_candidates = 512;
  int workers = 1;
};

enum class MaxVerdict { kValid, kInvalid, kExhausted };
std::string_view ToString(MaxVerdict v);

struct MaxReduction {
  MaxVerdict verdict = MaxVerdict::kExhausted;
  // Integer lambda over the consequents when valid.
  std::vector<Rational> lambda;
  std::optional<ProofCertificate> certificate;
  std::optional<Candidate> counterexample;
  // Epochs run: lambda grade g and refuter chunk g run side by side.
  int epochs = 0;
};

// Runs the lambda search (grade 1, 2, ... over primitive natural vectors,
// proving sum lambda_j d_j from the antecedents and gens) alongside the
// refuter stream. A Valid result in the same epoch as a counterexample
// wins; the two cannot both be correct, so that would be a bug.
MaxReduction MaxToLinear(const Clause& clause, const GeneratorSet& gens,
                         const SearchBudget& budget = {},
                         const MaxOptions& options = {});

// Natural vectors of length l with entry sum `grade` and gcd 1, in
// ascending lexicographic order.
std::vector<std::vector<int>> PrimitiveVectorsOfGrade(int l, int grade);

}  // namespace entropic

#endif  // ENTROPIC_REDUCTIONS_H_
