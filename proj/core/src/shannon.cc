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

#include "entropic/shannon.h"

#include <algorithm>
#include <numeric>

#include "entropic/errors.h"
#include "entropic/lp.h"

namespace entropic {
namespace {

std::string MemberList(VarSet s) {
  std::string out;
  for (int i : s.Members()) {
    if (!out.empty()) out += ",";
    out += std::to_string(i);
  }
  return out;
}

void CheckDimension(int n, const LinExpr& e) {
  if (e.n() != n) {
    throw DimensionError("expression over " + std::to_string(e.n()) +
                         " variables, expected " + std::to_string(n));
  }
}

// Scales nonnegative rationals to the primitive integer vector on the same
// ray.
std::vector<Rational> PrimitiveIntegers(std::vector<Rational> v) {
  BigInt den = CommonDenominator(v);
  BigInt g = 0;
  for (Rational& x : v) {
    x *= den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1) {
    for (Rational& x : v) x /= g;
  }
  return v;
}

}  // namespace

std::string_view ToString(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::kMonotonicity:
      return "monotonicity";
    case GeneratorKind::kSubmodularity:
      return "submodularity";
    case GeneratorKind::kUserValid:
      return "user-valid";
  }
  return "?";
}

std::string_view ToString(Tightness t) {
  switch (t) {
    case Tightness::kTight:
      return "tight";
    case Tightness::kSlack:
      return "slack";
    case Tightness::kUnknown:
      return "unknown";
  }
  return "?";
}

GeneratorSet GeneratorSet::Elemental(int n) {
  if (n < 1 || n > kMaxVariables) {
    throw InvalidArgument("elemental inequalities need 1 <= n <= 16");
  }
  GeneratorSet set(n);
  const VarSet full = VarSet::Full(n);
  for (int i = 0; i < n; ++i) {
    const VarSet xi = VarSet::Singleton(i);
    set.gens_.push_back({LinExpr::ConditionalEntropy(n, xi, full - xi),
                         GeneratorKind::kMonotonicity,
                         "mono[" + std::to_string(i) + "]", ""});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const VarSet xi = VarSet::Singleton(i), xj = VarSet::Singleton(j);
      const VarSet rest = full - xi - xj;
      // Every K subset of rest, by increasing mask.
      for (uint32_t k = 0;; k = (k - rest.bits()) & rest.bits()) {
        const VarSet ks(k);
        set.gens_.push_back({LinExpr::MutualInformation(n, xi, xj, ks),
                             GeneratorKind::kSubmodularity,
                             "sub[" + std::to_string(i) + "," +
                                 std::to_string(j) + "|" + MemberList(ks) + "]",
                             ""});
        if (k == rest.bits()) break;
      }
    }
  }
  return set;
}

void GeneratorSet::AddUserValid(LinExpr expr, std::string provenance) {
  CheckDimension(n_, expr);
  const size_t user = std::count_if(gens_.begin(), gens_.end(), [](auto& g) {
    return g.kind == GeneratorKind::kUserValid;
  });
  gens_.push_back({std::move(expr), GeneratorKind::kUserValid,
                   "user[" + std::to_string(user) + "]",
                   std::move(provenance)});
}

Rational DotDense(const LinExpr& c, std::span<const Rational> h) {
  Rational v = 0;
  for (const auto& [s, coeff] : c.terms()) v += coeff * h[s.index()];
  return v;
}

ProveResult Prove(const LinExpr& c, const GeneratorSet& gens,
                  std::span<const LinExpr> antecedents) {
  const int n = gens.n();
  CheckDimension(n, c);
  for (const LinExpr& a : antecedents) CheckDimension(n, a);
  const size_t rows = (size_t{1} << n) - 1;
  const size_t k = antecedents.size();
  const size_t cols = k + gens.size();

  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  auto place = [&](const LinExpr& e, size_t col) {
    for (const auto& [s, coeff] : e.terms()) a[s.index() - 1][col] = coeff;
  };
  for (size_t i = 0; i < k; ++i) place(antecedents[i], i);
  for (size_t e = 0; e < gens.size(); ++e) place(gens[e].expr, k + e);
  std::vector<Rational> b(rows);
  for (const auto& [s, coeff] : c.terms()) b[s.index() - 1] = coeff;

  LpSolution sol = SolveStandardForm(a, b, std::vector<Rational>(cols));
  ProveResult out;
  if (sol.status != LpStatus::kOptimal) {
    out.separating_vector.assign(rows + 1, Rational(0));
    for (size_t r = 0; r < rows; ++r) out.separating_vector[r + 1] = sol.farkas[r];
    return out;
  }
  ProofCertificate cert;
  cert.antecedent_multipliers.assign(sol.x.begin(), sol.x.begin() + k);
  cert.generator_multipliers.assign(sol.x.begin() + k, sol.x.end());
  for (size_t e = 0; e < gens.size(); ++e) {
    if (gens[e].kind == GeneratorKind::kUserValid &&
        cert.generator_multipliers[e] != 0) {
      cert.trusted.push_back(gens[e].provenance);
    }
  }
  if (!Verify(cert, c, gens, antecedents)) {
    throw Error("internal: LP certificate failed verification");
  }
  out.provable = true;
  out.certificate = std::move(cert);
  return out;
}

LinExpr Residual(const ProofCertificate& cert, const LinExpr& c,
                 const GeneratorSet& gens,
                 std::span<const LinExpr> antecedents) {
  if (cert.antecedent_multipliers.size() != antecedents.size() ||
      cert.generator_multipliers.size() != gens.size()) {
    throw DimensionError("certificate shape does not match the problem");
  }
  LinExpr r = c;
  for (size_t i = 0; i < antecedents.size(); ++i) {
    if (cert.antecedent_multipliers[i] != 0) {
      r -= antecedents[i] * cert.antecedent_multipliers[i];
    }
  }
  for (size_t e = 0; e < gens.size(); ++e) {
    if (cert.generator_multipliers[e] != 0) {
      r -= gens[e].expr * cert.generator_multipliers[e];
    }
  }
  return r;
}

bool Verify(const ProofCertificate& cert, const LinExpr& c,
            const GeneratorSet& gens, std::span<const LinExpr> antecedents) {
  if (cert.antecedent_multipliers.size() != antecedents.size() ||
      cert.generator_multipliers.size() != gens.size() || c.n() != gens.n()) {
    return false;
  }
  for (const Rational& m : cert.antecedent_multipliers) {
    if (m < 0) return false;
  }
  for (const Rational& m : cert.generator_multipliers) {
    if (m < 0) return false;
  }
  try {
    return Residual(cert, c, gens, antecedents).is_zero();
  } catch (const DimensionError&) {
    return false;
  }
}

SlackResult JointSlack(std::span<const LinExpr> cs, const SearchBudget& budget,
                       int workers) {
  SlackResult out;
  if (cs.empty()) return out;
  const int n = cs[0].n();
  for (const LinExpr& c : cs) CheckDimension(n, c);

  LinearProgram lp;
  for (int j = 0; j < n; ++j) lp.AddVariable(1);
  for (const LinExpr& c : cs) {
    LinearProgram::Row row;
    for (int j = 0; j < n; ++j) {
      Rational a = c.OnBasicModular(j);
      if (a != 0) row.emplace_back(j, a);
    }
    lp.AddConstraint(std::move(row), LinearProgram::Sense::kGreaterEqual, 1);
  }
  LpSolution sol = lp.Minimize();
  if (sol.status == LpStatus::kOptimal) {
    Candidate w;
    w.source = CandidateSource::kModular;
    w.weights = PrimitiveIntegers(sol.x);
    w.ComputeVector();
    out.found = true;
    out.witness = std::move(w);
    return out;
  }

  CandidateStream stream = CandidateStream::Refuter(n, budget);
  auto all_positive = [&](const EntropicCandidate& h) {
    for (const LinExpr& c : cs) {
      if (Eval(c, h).Sign() <= 0) return false;
    }
    return true;
  };
  out.witness = SearchFirst(stream, all_positive, workers);
  out.found = out.witness.has_value();
  return out;
}

TightnessResult ClassifyTight(const LinExpr& c, const GeneratorSet& gens,
                              const SearchBudget& budget, int workers) {
  TightnessResult out;
  ProveResult p = Prove(-c, gens);
  if (p.provable) {
    out.verdict = Tightness::kTight;
    out.certificate = std::move(p.certificate);
    return out;
  }
  SlackResult s = JointSlack(std::span<const LinExpr>(&c, 1), budget, workers);
  if (s.found) {
    out.verdict = Tightness::kSlack;
    out.witness = std::move(s.witness);
  }
  return out;
}

}  // namespace entropic
