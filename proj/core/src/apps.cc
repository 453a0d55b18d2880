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

#include "entropic/apps.h"

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "entropic/errors.h"
#include "entropic/parser.h"
#include "entropic/reductions.h"
#include "entropic/refuter.h"
#include "entropic/shannon.h"

namespace entropic {
namespace {

constexpr VarSet kA = VarSet::Singleton(0), kB = VarSet::Singleton(1),
                 kC = VarSet::Singleton(2), kD = VarSet::Singleton(3);

LinExpr I(VarSet y, VarSet z, VarSet x = VarSet()) {
  return LinExpr::MutualInformation(4, y, z, x);
}

std::string Coef(const Rational& r) {
  return r == 1 ? "" : ToDisplayString(r) + " ";
}

CorpusEntry Entry(std::string name, std::string summary, std::string source,
                  Expectation e, std::vector<std::string> lambda = {}) {
  return {std::move(name), std::move(summary), std::move(source), e,
          std::move(lambda)};
}

std::vector<CorpusEntry> BuildCorpus() {
  std::vector<CorpusEntry> c;
  c.push_back(Entry(
      "kopparty_rossman",
      "max of the three 2h(pair) - h(single) - h(XYZ) terms is nonnegative",
      "vars X Y Z\n"
      "max(2H(XY) - H(X) - H(XYZ), 2H(YZ) - H(Y) - H(XYZ),\n"
      "    2H(XZ) - H(Z) - H(XYZ)) >= 0\n",
      Expectation::kMaxValid, {"1/1", "1/1", "1/1"}));
  c.push_back(Entry(
      "kr_sum", "sum of the three max terms is nonnegative (Shannon)",
      "vars X Y Z\n"
      "2H(XY) - H(X) - H(XYZ) + 2H(YZ) - H(Y) - H(XYZ)\n"
      "  + 2H(XZ) - H(Z) - H(XYZ) >= 0\n",
      Expectation::kProvable));
  c.push_back(Entry("agm_triangle",
                    "triangle query size bound: Shearer over three pairs",
                    "vars X Y Z\nH(XY) + H(YZ) + H(XZ) >= 2H(XYZ)\n",
                    Expectation::kProvable));
  for (int k = 1; k <= 3; ++k) {
    c.push_back(Entry("matus_k" + std::to_string(k),
                      "non-Shannon Matus inequality, k = " + std::to_string(k),
                      MatusSource(k), Expectation::kNotProvable));
  }
  c.push_back(Entry(
      "fd_join_bound", "join size bound under two functional dependencies",
      "vars X Y Z U\n"
      "H(XY) + H(YZ) + H(ZU) + H(X|YU) + H(U|XZ) >= 2H(XYZU)\n",
      Expectation::kProvable));
  c.push_back(Entry(
      "kr_conditional", "conditional form of the max inequality; antecedents have slack",
      "vars X Y Z\n"
      "[H(XYZ) + H(X) >= 2H(XY), H(XYZ) + H(Y) >= 2H(YZ)]\n"
      "  => 2H(XZ) >= H(XYZ) + H(Z)\n",
      Expectation::kSlackProvable, {"1/1", "1/1"}));
  c.push_back(Entry(
      "ci_tight_family", "essentially conditioned CI implication",
      "vars A B C D\n"
      "[I(C;D|A) = 0, I(C;D|B) = 0, I(A;B) = 0, I(B;C|D) = 0]\n"
      "  => I(C;D) = 0\n",
      Expectation::kNotProvable));
  for (int p = 1; p <= 3; ++p) {
    const int q = TightFamilyQ(p);
    c.push_back(Entry(
        "ci_relaxation_p" + std::to_string(p),
        "unconditional relaxation of ci_tight_family at p = " + std::to_string(p) +
            ", q = " + std::to_string(q),
        "vars A B C D\n" + std::to_string(q) +
            " (I(C;D|A) + I(C;D|B) + I(A;B) + I(B;C|D))" +
            (p == 1 ? std::string(" + H(ABCD)")
                    : " + 1/" + std::to_string(p) + " H(ABCD)") +
            " >= I(C;D)\n",
        Expectation::kProvable));
  }
  c.push_back(Entry(
      "sample_ebic", "Boolean constraint example",
      "vars X Y Z\n"
      "[H(XY) <= 2/3 H(XYZ)] => max(H(YZ), H(XZ)) >= 2/3 H(XYZ)\n",
      Expectation::kMaxValid, {"1/1", "1/1"}));
  c.push_back(Entry("sample_iip", "information inequality example",
                    "vars X Y Z\nH(XY) + H(YZ) + H(XZ) >= 2H(XYZ)\n",
                    Expectation::kProvable));
  c.push_back(Entry(
      "sample_maxiip", "max-information inequality example",
      "vars X Y Z\nmax(H(XY), H(YZ), H(XZ)) >= 2/3 H(XYZ)\n",
      Expectation::kMaxValid, {"1/1", "1/1", "1/1"}));
  c.push_back(Entry(
      "sample_cond", "conditional information inequality example",
      "vars X Y Z\n"
      "[H(XY) <= 2/3 H(XYZ), H(YZ) <= 2/3 H(XYZ)] => H(XZ) >= 2/3 H(XYZ)\n",
      Expectation::kSlackProvable, {"1/1", "1/1"}));
  c.push_back(Entry(
      "sample_ci", "conditional independence example",
      "vars X Y Z\n[I(X;Y) = 0, I(X;Z|Y) = 0] => I(X;Z) = 0\n",
      Expectation::kProvable));
  c.push_back(Entry("false_ci",
                    "pairwise independence does not give conditional "
                    "independence",
                    "vars X Y Z\n[I(X;Y) = 0] => I(X;Y|Z) = 0\n",
                    Expectation::kRefutable));
  c.push_back(Entry("false_max", "false max-inequality",
                    "vars X Y\nmax(-H(X), -H(Y)) >= 0\n",
                    Expectation::kRefutable));
  c.push_back(Entry(
      "secret_sharing_2of2",
      "2-of-2 threshold scheme: every share is at least the secret",
      FormatConstraint(SecretSharingConstraint(2, {VarSet(3)}, Rational(1))) +
          "\n",
      Expectation::kTightProvable, {"0/1", "0/1", "1/1"}));
  return c;
}

}  // namespace

LinExpr MatusExpr(int k) {
  if (k < 1) throw InvalidArgument("Matus family needs k >= 1");
  LinExpr e = I(kC, kD, kA) + I(kA, kB) - I(kC, kD);
  e += I(kC, kD, kB) * (Rational(k + 3) / 2);
  e += I(kB, kC, kD) * (Rational(k - 1) / 2);
  e += I(kB, kD, kC) * Rational(1, k);
  return e;
}

std::string MatusSource(int k) {
  if (k < 1) throw InvalidArgument("Matus family needs k >= 1");
  return "vars A B C D\nI(C;D|A) + " + Coef((Rational(k + 3) / 2)) +
         "I(C;D|B) + I(A;B) + " + ToDisplayString((Rational(k - 1) / 2)) +
         " I(B;C|D) + " + Coef(Rational(1, k)) + "I(B;D|C) >= I(C;D)\n";
}

LinExpr TightFamilyExpr(int p, int q) {
  if (p < 1 || q < 0) throw InvalidArgument("need p >= 1 and q >= 0");
  LinExpr sum = I(kC, kD, kA) + I(kC, kD, kB) + I(kA, kB) + I(kB, kC, kD);
  return sum * Rational(q) + LinExpr::Entropy(4, VarSet::Full(4)) *
                                 Rational(1, p) -
         I(kC, kD);
}

int TightFamilyQ(int p) { return std::max((p + 3 + 1) / 2, 1); }

std::vector<VarSet> UpwardClosure(int participants,
                                  const std::vector<VarSet>& minimal) {
  std::vector<VarSet> out;
  for (uint32_t m = 1; m < (uint32_t{1} << participants); ++m) {
    for (VarSet f : minimal) {
      if (f.IsSubsetOf(VarSet(m))) {
        out.push_back(VarSet(m));
        break;
      }
    }
  }
  return out;
}

BooleanConstraint SecretSharingConstraint(int participants,
                                          const std::vector<VarSet>& access,
                                          const Rational& ell) {
  if (participants < 1 || participants + 1 > kMaxVariables) {
    throw InvalidArgument("participant count out of range");
  }
  if (access.empty()) {
    throw InvalidArgument("the access structure must not be empty");
  }
  const VarSet people = VarSet::Full(participants);
  std::vector<bool> in(size_t{1} << participants, false);
  for (VarSet f : access) {
    if (f.empty() || !f.IsSubsetOf(people)) {
      throw InvalidArgument("access sets must be nonempty sets of participants");
    }
    in[f.index()] = true;
  }
  for (VarSet f : access) {
    for (int i = 0; i < participants; ++i) {
      if (!in[(f | VarSet::Singleton(i)).index()]) {
        throw InvalidArgument("access structure is not closed under supersets");
      }
    }
  }
  const int n = participants + 1;
  const VarSet secret = VarSet::Singleton(participants);
  Clause clause;
  for (uint32_t m = 1; m < (uint32_t{1} << participants); ++m) {
    const LinExpr e = in[m] ? LinExpr::ConditionalEntropy(n, secret, VarSet(m))
                            : LinExpr::MutualInformation(n, secret, VarSet(m));
    clause.antecedents.push_back(e);
    clause.antecedents.push_back(-e);
  }
  clause.consequents.push_back(-LinExpr::Entropy(n, secret));
  for (int i = 0; i < participants; ++i) {
    clause.consequents.push_back(LinExpr::Entropy(n, VarSet::Singleton(i)) -
                                 LinExpr::Entropy(n, secret) * ell);
  }
  BooleanConstraint out;
  out.n = n;
  for (int i = 1; i <= n; ++i) out.variable_names.push_back("X" + std::to_string(i));
  out.clauses.push_back(std::move(clause));
  return out;
}

std::string_view ToString(Expectation e) {
  switch (e) {
    case Expectation::kProvable:
      return "provable";
    case Expectation::kNotProvable:
      return "not-provable";
    case Expectation::kRefutable:
      return "refutable";
    case Expectation::kMaxValid:
      return "max-valid";
    case Expectation::kSlackProvable:
      return "slack-provable";
    case Expectation::kTightProvable:
      return "tight-provable";
  }
  return "?";
}

Expectation ParseExpectation(std::string_view s) {
  for (Expectation e :
       {Expectation::kProvable, Expectation::kNotProvable,
        Expectation::kRefutable, Expectation::kMaxValid,
        Expectation::kSlackProvable, Expectation::kTightProvable}) {
    if (ToString(e) == s) return e;
  }
  throw InvalidArgument("unknown expectation '" + std::string(s) + "'");
}

BooleanConstraint CorpusEntry::Parse() const { return ParseConstraint(source); }

const std::vector<CorpusEntry>& Corpus() {
  static const std::vector<CorpusEntry>* corpus =
      new std::vector<CorpusEntry>(BuildCorpus());
  return *corpus;
}

const CorpusEntry* FindCorpusEntry(std::string_view name) {
  for (const CorpusEntry& e : Corpus()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

namespace {

std::string LambdaString(const std::vector<Rational>& lambda) {
  std::string out;
  for (const Rational& r : lambda) {
    out += (out.empty() ? "" : ",") + ToFractionString(r);
  }
  return "(" + out + ")";
}

bool LambdaMatches(const CorpusEntry& e, const std::vector<Rational>& got) {
  if (e.lambda.empty()) return true;
  if (e.lambda.size() != got.size()) return false;
  // Same ray: compare after dividing by the first nonzero entry.
  Rational scale_want = 0, scale_got = 0;
  for (size_t i = 0; i < got.size(); ++i) {
    const Rational want = ParseRational(e.lambda[i]);
    if (scale_want == 0 && want != 0) {
      scale_want = want;
      scale_got = got[i];
    }
  }
  if (scale_got == 0) return false;
  for (size_t i = 0; i < got.size(); ++i) {
    if (ParseRational(e.lambda[i]) / scale_want != got[i] / scale_got) {
      return false;
    }
  }
  return true;
}

}  // namespace

FixtureCheck CheckFixture(const CorpusEntry& entry, const SearchBudget& budget,
                          int workers) {
  const BooleanConstraint c = entry.Parse();
  const GeneratorSet gens = GeneratorSet::Elemental(c.n);
  FixtureCheck out;
  switch (entry.expected) {
    case Expectation::kProvable:
    case Expectation::kNotProvable: {
      bool all = true;
      for (const Clause& cl : c.clauses) {
        if (cl.consequents.size() != 1 ||
            !Prove(cl.consequents[0], gens, cl.antecedents).provable) {
          all = false;
        }
      }
      out.observed = all ? "provable" : "not-provable";
      out.matched = all == (entry.expected == Expectation::kProvable);
      break;
    }
    case Expectation::kRefutable: {
      RefuteResult r = RefuteParallel(c, budget, workers);
      out.observed = r.found ? "refuted at index " +
                                   std::to_string(r.counterexample->index)
                             : "not-found";
      out.matched = r.found;
      break;
    }
    case Expectation::kMaxValid: {
      out.matched = true;
      for (const Clause& cl : c.clauses) {
        MaxOptions opt;
        opt.workers = workers;
        MaxReduction m = MaxToLinear(cl, gens, budget, opt);
        out.observed += std::string(ToString(m.verdict)) + " " +
                        LambdaString(m.lambda);
        out.matched = out.matched && m.verdict == MaxVerdict::kValid &&
                      LambdaMatches(entry, m.lambda);
      }
      break;
    }
    case Expectation::kSlackProvable: {
      SlackReduction s = ReduceSlack(c.clauses.at(0), gens, budget);
      out.observed = (s.proved ? "proved " : "not-proved ") +
                     LambdaString(s.lambda);
      out.matched = c.clauses.size() == 1 && s.proved &&
                    LambdaMatches(entry, s.lambda);
      break;
    }
    case Expectation::kTightProvable: {
      TightReduction t = ReduceTight(c.clauses.at(0), gens);
      out.observed = (t.proved ? "proved " : "not-proved ") +
                     LambdaString(t.lambda);
      out.matched = c.clauses.size() == 1 && t.proved &&
                    LambdaMatches(entry, t.lambda);
      break;
    }
  }
  return out;
}

std::string CorpusManifest() {
  nlohmann::ordered_json m;
  m["format"] = "entropic-corpus/1";
  m["fixtures"] = nlohmann::ordered_json::array();
  for (const CorpusEntry& e : Corpus()) {
    nlohmann::ordered_json f;
    f["name"] = e.name;
    f["file"] = e.name + ".iic";
    f["summary"] = e.summary;
    f["expected"] = ToString(e.expected);
    if (!e.lambda.empty()) f["lambda"] = e.lambda;
    m["fixtures"].push_back(std::move(f));
  }
  return m.dump(2) + "\n";
}

std::string CorpusDirectory(const std::string& fallback) {
  if (const char* env = std::getenv("ENTROPIC_CORPUS"); env && *env) return env;
  return fallback;
}

}  // namespace entropic
