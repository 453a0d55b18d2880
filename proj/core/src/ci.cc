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

#include "entropic/ci.h"

#include <regex>
#include <sstream>

#include "entropic/errors.h"
#include "entropic/parser.h"

namespace entropic {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Atom indices whose outcome agrees with `values` on the members of `s`
// (values indexed by variable).
AtomSum MarginalAtoms(int n, int domain, VarSet s,
                      const std::vector<int>& values) {
  if (s.empty()) return {};
  AtomSum atoms;
  size_t total = 1;
  for (int i = 0; i < n; ++i) total *= domain;
  for (size_t k = 0; k < total; ++k) {
    size_t rest = k;
    bool match = true;
    for (int i = n - 1; i >= 0; --i) {
      const int v = static_cast<int>(rest % domain);
      rest /= domain;
      if (s.contains(i) && v != values[i]) {
        match = false;
        break;
      }
    }
    if (match) atoms.push_back(static_cast<int>(k));
  }
  return atoms;
}

std::vector<ProductEquality> Factorizations(int n, int domain,
                                            const CIStatement& s) {
  std::vector<ProductEquality> out;
  const std::vector<int> members = (s.x | s.y | s.z).Members();
  std::vector<int> values(n, 0);
  while (true) {
    ProductEquality e;
    e.lhs[0] = MarginalAtoms(n, domain, s.x | s.y | s.z, values);
    e.lhs[1] = MarginalAtoms(n, domain, s.x, values);
    e.rhs[0] = MarginalAtoms(n, domain, s.x | s.y, values);
    e.rhs[1] = MarginalAtoms(n, domain, s.x | s.z, values);
    out.push_back(std::move(e));
    // Next assignment, last member fastest.
    int i = static_cast<int>(members.size()) - 1;
    while (i >= 0 && values[members[i]] == domain - 1) values[members[i--]] = 0;
    if (i < 0) break;
    ++values[members[i]];
  }
  return out;
}

Rational SumAtoms(const AtomSum& a, std::span<const Rational> p) {
  if (a.empty()) return 1;
  Rational s = 0;
  for (int k : a) s += p[k];
  return s;
}

std::string SmtSum(const AtomSum& a) {
  if (a.empty()) return "1.0";
  if (a.size() == 1) return "p_" + std::to_string(a[0]);
  std::string out = "(+";
  for (int k : a) out += " p_" + std::to_string(k);
  return out + ")";
}

std::string SmtEquality(const ProductEquality& e) {
  return "(= (* " + SmtSum(e.lhs[0]) + " " + SmtSum(e.lhs[1]) + ") (* " +
         SmtSum(e.rhs[0]) + " " + SmtSum(e.rhs[1]) + "))";
}

}  // namespace

void CIStatement::Validate(int n) const {
  const VarSet full = VarSet::Full(n);
  if (!y.IsSubsetOf(full) || !z.IsSubsetOf(full) || !x.IsSubsetOf(full)) {
    throw DimensionError("CI statement mentions a variable outside [n]");
  }
  if (y.empty() || z.empty()) {
    throw InvalidArgument("both sides of a CI statement must be nonempty");
  }
  if (x.Intersects(y) || x.Intersects(z)) {
    throw InvalidArgument("the conditioning set overlaps a side");
  }
}

LinExpr CIStatement::Information(int n) const {
  return LinExpr::MutualInformation(n, y, z, x);
}

CIStatement ParseCI(std::string_view text,
                    const std::vector<std::string>& names) {
  std::string s(text);
  for (const std::string sym : {"⫫", "_||_"}) {
    for (size_t at; (at = s.find(sym)) != std::string::npos;) {
      s.replace(at, sym.size(), "_|_");
    }
  }
  const size_t ind = s.find("_|_");
  if (ind == std::string::npos) {
    throw InvalidArgument("CI statement needs '_|_': " + std::string(text));
  }
  std::string_view left = Trim(std::string_view(s).substr(0, ind));
  std::string_view right = std::string_view(s).substr(ind + 3);
  std::string_view cond;
  if (size_t bar = right.find('|'); bar != std::string_view::npos) {
    cond = Trim(right.substr(bar + 1));
    right = right.substr(0, bar);
  }
  right = Trim(right);
  if (!left.empty() && left.front() == '(' && !cond.empty() &&
      cond.back() == ')') {
    left = Trim(left.substr(1));
    cond = Trim(cond.substr(0, cond.size() - 1));
  } else if (!left.empty() && left.front() == '(' && cond.empty() &&
             !right.empty() && right.back() == ')') {
    left = Trim(left.substr(1));
    right = Trim(right.substr(0, right.size() - 1));
  }
  CIStatement out;
  out.y = ParseVarSet(left, names);
  out.z = ParseVarSet(right, names);
  if (!cond.empty()) out.x = ParseVarSet(cond, names);
  out.Validate(static_cast<int>(names.size()));
  return out;
}

std::string FormatCI(const CIStatement& s,
                     const std::vector<std::string>& names) {
  std::string out = FormatVarSet(s.y, names) + " _|_ " + FormatVarSet(s.z, names);
  if (!s.x.empty()) out += " | " + FormatVarSet(s.x, names);
  return out;
}

Clause ToClause(int n, std::span<const CIStatement> antecedents,
                const CIStatement& consequent) {
  Clause c;
  for (const CIStatement& s : antecedents) {
    s.Validate(n);
    LinExpr i = s.Information(n);
    c.antecedents.push_back(i);
    c.antecedents.push_back(-i);
  }
  consequent.Validate(n);
  c.consequents.push_back(-consequent.Information(n));
  return c;
}

ProveResult ProveCI(int n, std::span<const CIStatement> antecedents,
                    const CIStatement& consequent, const GeneratorSet& gens) {
  Clause c = ToClause(n, antecedents, consequent);
  return Prove(c.consequents[0], gens, c.antecedents);
}

size_t PolySystem::num_atoms() const {
  size_t k = 1;
  for (int i = 0; i < n; ++i) k *= domain;
  return k;
}

PolySystem BuildDelta(int n, std::span<const CIStatement> antecedents,
                      const CIStatement& consequent, int domain) {
  if (domain < 1) throw InvalidArgument("domain size must be at least 1");
  if (n < 1 || n > kMaxVariables) throw InvalidArgument("bad variable count");
  PolySystem sys;
  sys.n = n;
  sys.domain = domain;
  sys.num_antecedents = static_cast<int>(antecedents.size());
  for (const CIStatement& s : antecedents) {
    s.Validate(n);
    for (auto& e : Factorizations(n, domain, s)) {
      sys.antecedent_equalities.push_back(std::move(e));
    }
  }
  consequent.Validate(n);
  sys.consequent_disjuncts = Factorizations(n, domain, consequent);
  return sys;
}

bool SatisfiesEquality(const ProductEquality& e, std::span<const Rational> p) {
  return SumAtoms(e.lhs[0], p) * SumAtoms(e.lhs[1], p) ==
         SumAtoms(e.rhs[0], p) * SumAtoms(e.rhs[1], p);
}

bool SolvesDelta(const PolySystem& sys, const Distribution& d) {
  if (d.n() != sys.n || d.num_outcomes() != sys.num_atoms()) return false;
  for (int s : d.domain_sizes()) {
    if (s != sys.domain) return false;
  }
  for (const auto& e : sys.antecedent_equalities) {
    if (!SatisfiesEquality(e, d.pmf())) return false;
  }
  for (const auto& e : sys.consequent_disjuncts) {
    if (!SatisfiesEquality(e, d.pmf())) return true;
  }
  return false;
}

std::optional<Candidate> FalsifyCI(int n,
                                   std::span<const CIStatement> antecedents,
                                   const CIStatement& consequent,
                                   const FalsifyBudget& budget, int workers) {
  const Clause clause = ToClause(n, antecedents, consequent);
  CandidateStream stream = CandidateStream::UniformDomains(
      n, budget.max_domain, budget.max_denominator);
  std::optional<Candidate> hit = SearchFirst(
      stream, [&](const EntropicCandidate& h) { return !Holds(clause, h); },
      workers);
  if (hit) {
    const Distribution& d = *hit->distribution;
    PolySystem sys = BuildDelta(n, antecedents, consequent, d.domain_sizes()[0]);
    if (!SolvesDelta(sys, d)) {
      throw Error("internal: CI counterexample fails the product equalities");
    }
  }
  return hit;
}

std::string ExportDelta(const PolySystem& sys) {
  std::ostringstream out;
  const size_t atoms = sys.num_atoms();
  out << "; entropic-delta n=" << sys.n << " N=" << sys.domain
      << " atoms=" << atoms
      << " antecedents=" << sys.antecedent_equalities.size()
      << " disjuncts=" << sys.consequent_disjuncts.size() << "\n";
  out << "; atom k is the outcome with digits of k in base N, variable 0 "
         "most significant\n";
  out << "(set-logic QF_NRA)\n";
  for (size_t k = 0; k < atoms; ++k) {
    out << "(declare-fun p_" << k << " () Real)\n";
  }
  for (size_t k = 0; k < atoms; ++k) out << "(assert (>= p_" << k << " 0.0))\n";
  AtomSum all(atoms);
  for (size_t k = 0; k < atoms; ++k) all[k] = static_cast<int>(k);
  out << "(assert (= " << SmtSum(all) << " 1.0))\n";
  for (const auto& e : sys.antecedent_equalities) {
    out << "(assert " << SmtEquality(e) << ")\n";
  }
  out << "(assert (or";
  for (const auto& e : sys.consequent_disjuncts) {
    out << "\n  (not " << SmtEquality(e) << ")";
  }
  if (sys.consequent_disjuncts.empty()) out << " false";
  out << "))\n(check-sat)\n";
  return out.str();
}

DeltaHeader ParseDeltaHeader(std::string_view text) {
  static const std::regex re(
      R"(^; entropic-delta n=(\d+) N=(\d+) atoms=(\d+) antecedents=(\d+) disjuncts=(\d+))");
  std::string first(text.substr(0, text.find('\n')));
  std::smatch m;
  if (!std::regex_search(first, m, re)) {
    throw FormatError("missing entropic-delta header");
  }
  DeltaHeader h;
  h.n = std::stoi(m[1]);
  h.domain = std::stoi(m[2]);
  h.atoms = std::stoull(m[3]);
  h.antecedent_equalities = std::stoull(m[4]);
  h.disjuncts = std::stoull(m[5]);
  return h;
}

}  // namespace entropic
