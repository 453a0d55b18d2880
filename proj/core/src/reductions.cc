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

#include "entropic/reductions.h"

#include <future>
#include <numeric>
#include <sstream>

#include "entropic/errors.h"
#include "entropic/lp.h"

namespace entropic {
namespace {

// h(X_i | X_rest).
LinExpr LastEntropy(int n, int i) {
  const VarSet xi = VarSet::Singleton(i);
  return LinExpr::ConditionalEntropy(n, xi, VarSet::Full(n) - xi);
}

LinExpr Combine(std::span<const LinExpr> exprs,
                std::span<const Rational> weights, int n) {
  LinExpr out(n);
  for (size_t j = 0; j < exprs.size(); ++j) {
    if (weights[j] != 0) out += exprs[j] * weights[j];
  }
  return out;
}

int CommonDimension(const Clause& clause) {
  const int n = clause.n();
  clause.Validate(n);
  return n;
}

void Enumerate(int l, int remaining, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == l - 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur.push_back(v);
    Enumerate(l, remaining - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::string_view ToString(MaxVerdict v) {
  switch (v) {
    case MaxVerdict::kValid:
      return "valid";
    case MaxVerdict::kInvalid:
      return "invalid";
    case MaxVerdict::kExhausted:
      return "exhausted";
  }
  return "?";
}

ChanBalanced ChanBalance(const LinExpr& c) {
  const int n = c.n();
  ChanBalanced out{c, {}};
  for (int i = 0; i < n; ++i) {
    Rational v = c.OnBasicModular(i);
    out.checks.push_back(v);
    if (v != 0) out.balanced -= LastEntropy(n, i) * v;
  }
  return out;
}

std::vector<std::vector<Rational>> ModularMatrix(std::span<const LinExpr> d) {
  std::vector<std::vector<Rational>> a;
  for (const LinExpr& e : d) {
    if (e.n() != d[0].n()) throw DimensionError("expressions differ in n");
    std::vector<Rational> row;
    for (int j = 0; j < e.n(); ++j) row.push_back(e.OnBasicModular(j));
    a.push_back(std::move(row));
  }
  return a;
}

int ExactRank(const std::vector<std::vector<Rational>>& m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  std::vector<std::vector<BigInt>> a;
  for (const auto& row : m) {
    const BigInt den = CommonDenominator(row);
    std::vector<BigInt> r;
    for (const Rational& x : row) r.push_back(x.get_num() * (den / x.get_den()));
    a.push_back(std::move(r));
  }
  // Bareiss: every intermediate entry is a minor, so divisions are exact.
  int rank = 0;
  BigInt prev = 1;
  for (size_t col = 0; col < cols && rank < static_cast<int>(a.size()); ++col) {
    size_t piv = a.size();
    for (size_t r = rank; r < a.size(); ++r) {
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    for (size_t r = rank + 1; r < a.size(); ++r) {
      for (size_t c = col + 1; c < cols; ++c) {
        BigInt v = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r][c] = v;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

BalanceReport GroupBalance(std::span<const LinExpr> d) {
  if (d.empty()) throw InvalidArgument("group balance needs a nonempty set");
  BalanceReport out;
  out.matrix = ModularMatrix(d);
  out.rank = ExactRank(out.matrix);
  const int n = d[0].n();

  LinearProgram lp;
  for (int j = 0; j < n; ++j) lp.AddVariable();
  for (const auto& row : out.matrix) {
    LinearProgram::Row r;
    for (int j = 0; j < n; ++j) {
      if (row[j] != 0) r.emplace_back(j, row[j]);
    }
    lp.AddConstraint(std::move(r), LinearProgram::Sense::kEqual, 0);
  }
  LinearProgram::Row sum;
  for (int j = 0; j < n; ++j) sum.emplace_back(j, 1);
  lp.AddConstraint(std::move(sum), LinearProgram::Sense::kEqual, 1);
  LpSolution sol = lp.Minimize();
  if (sol.status == LpStatus::kOptimal) {
    std::vector<Rational> w = sol.x;
    const BigInt den = CommonDenominator(w);
    BigInt g = 0;
    for (Rational& x : w) {
      x *= den;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    for (Rational& x : w) x /= g;
    out.witness = std::move(w);
  }
  out.group_balanced =
      out.rank == static_cast<int>(d.size()) - 1 && out.witness.has_value();
  return out;
}

std::vector<LinExpr> ToGroupBalanced(std::span<const LinExpr> d,
                                     std::span<const Rational> lambda) {
  if (d.size() != lambda.size()) {
    throw InvalidArgument("need one lambda per expression");
  }
  if (d.empty()) return {};
  const int n = d[0].n();
  if (static_cast<int>(d.size()) != n) {
    throw InvalidArgument("the strongly balanced construction needs |D| = n");
  }
  LinExpr sum_last(n);
  for (int j = 0; j < n; ++j) sum_last += LastEntropy(n, j);
  std::vector<LinExpr> out;
  for (int i = 0; i < n; ++i) {
    if (lambda[i] <= 0) throw InvalidArgument("lambda must be positive");
    LinExpr correction = LastEntropy(n, i) * Rational(n) - sum_last;
    out.push_back(ChanBalance(d[i]).balanced + correction * Rational(1 / lambda[i]));
  }
  return out;
}

TightSchedule ParseSchedule(std::string_view text) {
  TightSchedule s;
  std::string buf(text);
  for (char& ch : buf) {
    if (ch == ';') ch = ' ';
  }
  std::istringstream in(buf);
  bool p_reset = false;
  for (std::string tok; in >> tok;) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw InvalidArgument("schedule: bad token '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    std::string value = tok.substr(eq + 1);
    std::vector<int> nums;
    std::istringstream vs(value);
    for (std::string part; std::getline(vs, part, ',');) {
      size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(part, &used);
      } catch (const std::exception&) {
      }
      if (used != part.size() || v < 0) {
        throw InvalidArgument("schedule: bad number '" + part + "'");
      }
      nums.push_back(v);
    }
    if (key == "p") {
      if (!p_reset) s.p.clear();
      p_reset = true;
      for (int v : nums) {
        if (v < 1) throw InvalidArgument("schedule: p must be >= 1");
        s.p.push_back(v);
      }
    } else if ((key == "qmax" || key == "grade") && nums.size() == 1) {
      (key == "qmax" ? s.q_max : s.max_grade) = nums[0];
    } else {
      throw InvalidArgument("schedule: unknown key '" + key + "'");
    }
  }
  return s;
}

std::vector<std::vector<int>> PrimitiveVectorsOfGrade(int l, int grade) {
  std::vector<std::vector<int>> all, out;
  if (l < 1 || grade < 1) return out;
  std::vector<int> cur;
  Enumerate(l, grade, cur, all);
  for (auto& v : all) {
    int g = 0;
    for (int x : v) g = std::gcd(g, x);
    if (g == 1) out.push_back(std::move(v));
  }
  return out;
}

TightReduction ReduceTight(const Clause& clause, const GeneratorSet& gens,
                           const TightSchedule& schedule) {
  const int n = CommonDimension(clause);
  if (n != gens.n()) throw DimensionError("clause and generators differ in n");
  TightReduction out;
  LinExpr cond(n);
  for (size_t i = 0; i < clause.antecedents.size(); ++i) {
    const LinExpr& c = clause.antecedents[i];
    if (Prove(c, gens).provable) {
      out.dropped_antecedents.push_back(i);
      continue;
    }
    if (!Prove(-c, gens).provable) {
      throw InvalidArgument("antecedent " + std::to_string(i) +
                            " is not provably tight");
    }
    out.tight_antecedents.push_back(i);
    cond += c;
  }
  const LinExpr full = LinExpr::Entropy(n, VarSet::Full(n));
  const size_t l = clause.consequents.size();

  auto try_lambda = [&](const std::vector<Rational>& lambda) -> bool {
    const LinExpr base = Combine(clause.consequents, lambda, n);
    std::vector<TightStep> steps;
    for (int p : schedule.p) {
      const LinExpr head = base + full * Rational(1, p);
      auto attempt = [&](int q) {
        TightStep s{p, q, head - cond * Rational(q), {}};
        ProveResult r = Prove(s.target, gens);
        if (r.provable) s.certificate = std::move(*r.certificate);
        return std::make_pair(r.provable, std::move(s));
      };
      // Since -sum c_i is provable, provability is monotone in q.
      auto [ok, best] = attempt(schedule.q_max);
      if (!ok) return false;
      int lo = -1, hi = schedule.q_max;
      while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        auto [mid_ok, step] = attempt(mid);
        if (mid_ok) {
          hi = mid;
          best = std::move(step);
        } else {
          lo = mid;
        }
      }
      steps.push_back(std::move(best));
    }
    out.proved = true;
    out.lambda = lambda;
    out.steps = std::move(steps);
    return true;
  };

  if (l == 1) {
    try_lambda({Rational(1)});
    return out;
  }
  for (int g = 1; g <= schedule.max_grade; ++g) {
    for (const auto& v : PrimitiveVectorsOfGrade(static_cast<int>(l), g)) {
      if (try_lambda(std::vector<Rational>(v.begin(), v.end()))) return out;
    }
  }
  return out;
}

SlackReduction ReduceSlack(const Clause& clause, const GeneratorSet& gens,
                           const SearchBudget& budget) {
  const int n = CommonDimension(clause);
  if (n != gens.n()) throw DimensionError("clause and generators differ in n");
  if (clause.consequents.size() != 1) {
    throw InvalidArgument("the slack reduction takes a single consequent");
  }
  SlackReduction out;
  if (!clause.antecedents.empty()) {
    SlackResult s = JointSlack(clause.antecedents, budget);
    if (!s.found) {
      throw InvalidArgument("joint slack of the antecedents not established");
    }
    out.slack_witness = std::move(s.witness);
  }
  ProveResult r = Prove(clause.consequents[0], gens, clause.antecedents);
  if (r.provable) {
    out.proved = true;
    out.lambda = r.certificate->antecedent_multipliers;
    out.certificate = std::move(*r.certificate);
  }
  return out;
}

MaxReduction MaxToLinear(const Clause& clause, const GeneratorSet& gens,
                         const SearchBudget& budget,
                         const MaxOptions& options) {
  const int n = CommonDimension(clause);
  if (n != gens.n()) throw DimensionError("clause and generators differ in n");
  const size_t l = clause.consequents.size();
  MaxReduction out;
  CandidateStream stream = CandidateStream::Refuter(n, budget);
  bool stream_done = false;
  auto fails = [&](const EntropicCandidate& h) { return !Holds(clause, h); };

  struct LambdaHit {
    std::vector<Rational> lambda;
    ProofCertificate cert;
  };
  auto search_grade = [&](int g) -> std::optional<LambdaHit> {
    for (const auto& v : PrimitiveVectorsOfGrade(static_cast<int>(l), g)) {
      std::vector<Rational> lambda(v.begin(), v.end());
      ProveResult r = Prove(Combine(clause.consequents, lambda, n), gens,
                            clause.antecedents);
      if (r.provable) return LambdaHit{std::move(lambda), *r.certificate};
    }
    return std::nullopt;
  };

  for (int g = 1;; ++g) {
    const bool lambda_live = g <= options.max_grade;
    if (!lambda_live && stream_done) break;
    ++out.epochs;
    std::future<std::optional<LambdaHit>> lambda_side;
    if (lambda_live) lambda_side = std::async(std::launch::async, search_grade, g);
    std::optional<Candidate> cx;
    if (!stream_done) {
      const uint64_t before = stream.consumed();
      cx = SearchFirst(stream, fails, options.workers,
                       options.epoch_candidates);
      if (!cx && stream.consumed() - before < options.epoch_candidates) {
        stream_done = true;
      }
    }
    std::optional<LambdaHit> hit;
    if (lambda_live) hit = lambda_side.get();
    if (hit) {
      out.verdict = MaxVerdict::kValid;
      out.lambda = std::move(hit->lambda);
      out.certificate = std::move(hit->cert);
      return out;
    }
    if (cx) {
      out.verdict = MaxVerdict::kInvalid;
      out.counterexample = std::move(cx);
      return out;
    }
  }
  return out;
}

}  // namespace entropic
