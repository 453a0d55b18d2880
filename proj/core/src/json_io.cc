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

#include "entropic/json_io.h"

#include "entropic/errors.h"

namespace entropic {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("JSON: missing field '") + key + "'");
  }
  return j.at(key);
}

Json Rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& r : v) a.push_back(ToJson(r));
  return a;
}

}  // namespace

Json ToJson(const Rational& r) { return ToFractionString(r); }

Rational RationalFromJson(const Json& j) {
  if (!j.is_string()) throw FormatError("JSON: rational must be a string");
  try {
    return ParseRational(j.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("JSON: ") + e.what());
  }
}

Json ToJson(VarSet s) {
  Json a = Json::array();
  for (int i : s.Members()) a.push_back(i);
  return a;
}

VarSet VarSetFromJson(const Json& j) {
  if (!j.is_array()) throw FormatError("JSON: subset must be an index array");
  uint32_t bits = 0;
  for (const Json& x : j) {
    if (!x.is_number_integer() || x.get<int>() < 0 ||
        x.get<int>() >= kMaxVariables) {
      throw FormatError("JSON: bad variable index");
    }
    bits |= uint32_t{1} << x.get<int>();
  }
  return VarSet(bits);
}

Json ToJson(const LinExpr& e) {
  Json terms = Json::array();
  for (const auto& [s, c] : e.terms()) {
    terms.push_back(Json{{"set", ToJson(s)}, {"coeff", ToJson(c)}});
  }
  return Json{{"n", e.n()}, {"terms", std::move(terms)}};
}

LinExpr LinExprFromJson(const Json& j) {
  LinExpr e(Field(j, "n").get<int>());
  for (const Json& t : Field(j, "terms")) {
    const VarSet s = VarSetFromJson(Field(t, "set"));
    if (s.empty()) throw FormatError("JSON: coefficient on the empty set");
    try {
      e.Add(s, RationalFromJson(Field(t, "coeff")));
    } catch (const DimensionError& err) {
      throw FormatError(std::string("JSON: ") + err.what());
    }
  }
  return e;
}

Json ToJson(const LogLinValue& v) {
  Json a = Json::array();
  for (const LogTerm& t : v.Terms()) {
    a.push_back(Json{{"q", ToJson(t.q)}, {"r", ToJson(t.r)}});
  }
  return a;
}

LogLinValue LogLinValueFromJson(const Json& j) {
  if (!j.is_array()) throw FormatError("JSON: value must be a term list");
  std::vector<LogTerm> terms;
  for (const Json& t : j) {
    terms.push_back({RationalFromJson(Field(t, "q")),
                     RationalFromJson(Field(t, "r"))});
  }
  try {
    return LogLinValue::FromTerms(terms);
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("JSON: ") + e.what());
  }
}

Json ToJson(const EntropicCandidate& h) {
  Json values = Json::array();
  for (uint32_t m = 1; m < (uint32_t{1} << h.n()); ++m) {
    values.push_back(
        Json{{"set", ToJson(VarSet(m))}, {"value", ToJson(h.at(VarSet(m)))}});
  }
  return Json{{"n", h.n()}, {"values", std::move(values)}};
}

EntropicCandidate CandidateFromJson(const Json& j) {
  const int n = Field(j, "n").get<int>();
  if (n < 0 || n > kMaxVariables) throw FormatError("JSON: bad n");
  EntropicCandidate h(n);
  for (const Json& v : Field(j, "values")) {
    const VarSet s = VarSetFromJson(Field(v, "set"));
    if (s.Span() > n) throw FormatError("JSON: subset outside [n]");
    try {
      h.Set(s, LogLinValueFromJson(Field(v, "value")));
    } catch (const InvalidArgument& e) {
      throw FormatError(std::string("JSON: ") + e.what());
    }
  }
  return h;
}

Json ToJson(const Clause& c) {
  Json a = Json::array(), d = Json::array();
  for (const LinExpr& e : c.antecedents) a.push_back(ToJson(e));
  for (const LinExpr& e : c.consequents) d.push_back(ToJson(e));
  return Json{{"antecedents", std::move(a)}, {"consequents", std::move(d)}};
}

Clause ClauseFromJson(const Json& j) {
  Clause c;
  for (const Json& e : Field(j, "antecedents")) {
    c.antecedents.push_back(LinExprFromJson(e));
  }
  for (const Json& e : Field(j, "consequents")) {
    c.consequents.push_back(LinExprFromJson(e));
  }
  return c;
}

Json ToJson(const BooleanConstraint& c) {
  Json clauses = Json::array();
  for (const Clause& cl : c.clauses) clauses.push_back(ToJson(cl));
  return Json{{"n", c.n},
              {"variables", c.variable_names},
              {"clauses", std::move(clauses)}};
}

BooleanConstraint ConstraintFromJson(const Json& j) {
  BooleanConstraint c;
  c.n = Field(j, "n").get<int>();
  c.variable_names = Field(j, "variables").get<std::vector<std::string>>();
  for (const Json& cl : Field(j, "clauses")) {
    c.clauses.push_back(ClauseFromJson(cl));
  }
  try {
    c.Validate();
  } catch (const Error& e) {
    throw FormatError(std::string("JSON: ") + e.what());
  }
  return c;
}

Json ToJson(const Distribution& d) {
  Json pmf = Json::array();
  for (size_t k = 0; k < d.num_outcomes(); ++k) {
    if (d.probability(k) == 0) continue;
    pmf.push_back(
        Json{{"outcome", d.Outcome(k)}, {"p", ToJson(d.probability(k))}});
  }
  return Json{{"domains", d.domain_sizes()}, {"pmf", std::move(pmf)}};
}

Json ToJson(const VectorSpaceSystem& s) {
  return Json{{"q", s.q()}, {"d", s.d()}, {"bases", s.bases()}};
}

Json ToJson(const Candidate& c) {
  Json j{{"source", std::string(ToString(c.source))}, {"index", c.index}};
  if (c.distribution) j["distribution"] = ToJson(*c.distribution);
  if (c.system) j["system"] = ToJson(*c.system);
  if (c.source == CandidateSource::kModular) j["weights"] = Rationals(c.weights);
  return j;
}

Json ToJson(const ProofCertificate& cert, const GeneratorSet& gens) {
  Json g = Json::object();
  for (size_t e = 0; e < cert.generator_multipliers.size() && e < gens.size();
       ++e) {
    if (cert.generator_multipliers[e] != 0) {
      g[gens[e].id] = ToJson(cert.generator_multipliers[e]);
    }
  }
  return Json{{"antecedents", Rationals(cert.antecedent_multipliers)},
              {"generators", std::move(g)},
              {"trusted", cert.trusted}};
}

Json ToJson(const ClauseTrace& t) {
  return Json{{"antecedent_signs", t.antecedent_signs},
              {"consequent_signs", t.consequent_signs},
              {"holds", t.holds}};
}

Json ToJson(const SearchBudget& b) {
  return Json{{"s", b.max_support},
              {"D", b.max_denominator},
              {"vsdim", b.vs_max_dim},
              {"vsq", b.vs_primes}};
}

Json ToJson(const BalanceReport& r) {
  Json m = Json::array();
  for (const auto& row : r.matrix) m.push_back(Rationals(row));
  Json j{{"matrix", std::move(m)},
         {"rank", r.rank},
         {"group_balanced", r.group_balanced}};
  j["witness"] = r.witness ? Rationals(*r.witness) : Json(nullptr);
  return j;
}

}  // namespace entropic
