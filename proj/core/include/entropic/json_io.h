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

#ifndef ENTROPIC_JSON_IO_H_
#define ENTROPIC_JSON_IO_H_

#include <nlohmann/json.hpp>

#include "entropic/ci.h"
#include "entropic/clause.h"
#include "entropic/distribution.h"
#include "entropic/entropic_candidate.h"
#include "entropic/lin_expr.h"
#include "entropic/loglin.h"
#include "entropic/models.h"
#include "entropic/reductions.h"
#include "entropic/search.h"
#include "entropic/shannon.h"

// Canonical JSON forms. Rationals are "num/den" strings, subsets are
// ascending lists of variable indices, and keys keep insertion order so the
// output is byte-stable.
namespace entropic {

using Json = nlohmann::ordered_json;

Json ToJson(const Rational& r);
Rational RationalFromJson(const Json& j);

Json ToJson(VarSet s);
VarSet VarSetFromJson(const Json& j);

// {"n": 3, "terms": [{"set": [0, 1], "coeff": "2/1"}, ...]}
Json ToJson(const LinExpr& e);
LinExpr LinExprFromJson(const Json& j);

// [{"q": "1/2", "r": "3/1"}, ...] over primes, ascending.
Json ToJson(const LogLinValue& v);
LogLinValue LogLinValueFromJson(const Json& j);

// {"n": 2, "values": [{"set": [0], "value": [...]}, ...]} over nonempty sets.
Json ToJson(const EntropicCandidate& h);
EntropicCandidate CandidateFromJson(const Json& j);

Json ToJson(const Clause& c);
Clause ClauseFromJson(const Json& j);
Json ToJson(const BooleanConstraint& c);
BooleanConstraint ConstraintFromJson(const Json& j);

Json ToJson(const Distribution& d);
Json ToJson(const VectorSpaceSystem& s);
// Source, index and model of a candidate (the vector is omitted).
Json ToJson(const Candidate& c);

// {"antecedents": [...], "generators": {"id": "m", ...} (nonzero only),
//  "trusted": [...]}
Json ToJson(const ProofCertificate& cert, const GeneratorSet& gens);
Json ToJson(const ClauseTrace& t);
Json ToJson(const SearchBudget& b);
Json ToJson(const BalanceReport& r);

}  // namespace entropic

#endif  // ENTROPIC_JSON_IO_H_
