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

#ifndef ENTROPIC_SHANNON_H_
#define ENTROPIC_SHANNON_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entropic/lin_expr.h"
#include "entropic/search.h"

namespace entropic {

enum class GeneratorKind { kMonotonicity, kSubmodularity, kUserValid };
std::string_view ToString(GeneratorKind k);

// One inequality g . h >= 0 assumed valid.
struct Generator {
  LinExpr expr;
  GeneratorKind kind = GeneratorKind::kMonotonicity;
  // Stable identifier, e.g. "mono[2]", "sub[0,1|2,3]", "user[0]".
  std::string id;
  // Where a user-valid inequality came from; empty for elemental ones.
  std::string provenance;
};

class GeneratorSet {
 public:
  explicit GeneratorSet(int n = 0) : n_(n) {}

  // h(X_i | rest) >= 0 for each i, then I(X_i; X_j | K) >= 0 for i < j and
  // K ranging over subsets of the other variables: n + C(n,2) 2^(n-2) rows.
  static GeneratorSet Elemental(int n);

  // Appends a trusted inequality; every certificate using it lists
  // `provenance`.
  void AddUserValid(LinExpr expr, std::string provenance);

  int n() const { return n_; }
  size_t size() const { return gens_.size(); }
  const Generator& operator[](size_t i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const { return gens_; }

 private:
  int n_;
  std::vector<Generator> gens_;
};

// c = sum_i mu_i c_i + sum_e lambda_e g_e with every multiplier >= 0.
struct ProofCertificate {
  std::vector<Rational> antecedent_multipliers;
  std::vector<Rational> generator_multipliers;
  // Provenance notes of the user-valid generators with a nonzero multiplier.
  std::vector<std::string> trusted;
};

struct ProveResult {
  bool provable = false;
  std::optional<ProofCertificate> certificate;
  // When not provable: a vector h (indexed by subset mask, h[0] = 0) with
  // g . h >= 0 for every generator, c_i . h >= 0 for every antecedent and
  // c . h < 0. It certifies that no certificate exists at this generator
  // set; it need not be entropic.
  std::vector<Rational> separating_vector;
};

// Decides whether c lies in the cone spanned by the generators and the
// antecedents, by exact LP. "Not provable" is relative to `gens` only.
ProveResult Prove(const LinExpr& c, const GeneratorSet& gens,
                  std::span<const LinExpr> antecedents = {});

// c - sum mu_i c_i - sum lambda_e g_e. Throws DimensionError on shape
// mismatches.
LinExpr Residual(const ProofCertificate& cert, const LinExpr& c,
                 const GeneratorSet& gens,
                 std::span<const LinExpr> antecedents = {});

// True iff shapes match, all multipliers are >= 0 and the residual is
// exactly zero. Independent of the LP.
bool Verify(const ProofCertificate& cert, const LinExpr& c,
            const GeneratorSet& gens,
            std::span<const LinExpr> antecedents = {});

// (sum_i y_i c_i) . h for a dense vector y indexed by mask.
Rational DotDense(const LinExpr& c, std::span<const Rational> h);

struct SlackResult {
  bool found = false;
  // A modular candidate (weights set) or an enumerated one.
  std::optional<Candidate> witness;
};

// Looks for h with c_i . h > 0 for every i: first over nonnegative modular
// functions (LP: minimize sum w subject to A w >= 1, A_ij = c_i . h^(j);
// the optimum is scaled to a primitive integer vector), then over the
// refuter stream within `budget`.
SlackResult JointSlack(std::span<const LinExpr> cs,
                       const SearchBudget& budget = {}, int workers = 1);

enum class Tightness { kTight, kSlack, kUnknown };
std::string_view ToString(Tightness t);

struct TightnessResult {
  Tightness verdict = Tightness::kUnknown;
  // Proof of -c >= 0 when tight.
  std::optional<ProofCertificate> certificate;
  std::optional<Candidate> witness;
};

// Tight if -c is provable from gens; Slack if some witness gives c . h > 0.
TightnessResult ClassifyTight(const LinExpr& c, const GeneratorSet& gens,
                              const SearchBudget& budget = {},
                              int workers = 1);

}  // namespace entropic

#endif  // ENTROPIC_SHANNON_H_
