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

#include "entropic/recognizer.h"

#include <sstream>

#include "entropic/errors.h"
#include "entropic/parser.h"

namespace entropic {

std::string_view ToString(Recognition r) {
  switch (r) {
    case Recognition::kRejected:
      return "rejected";
    case Recognition::kRealized:
      return "realized";
    case Recognition::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

void CandidateRepr::Validate() const {
  if (n < 1 || n > kMaxVariables) throw InvalidArgument("bad variable count");
  const VarSet full = VarSet::Full(n);
  for (const auto& [s, e] : entries) {
    if (s.empty() || !s.IsSubsetOf(full)) {
      throw InvalidArgument("candidate entry on an invalid subset");
    }
    if (e.a <= 0 || e.b <= 0 || e.c <= 0) {
      throw InvalidArgument("candidate entries need a, b, c >= 1");
    }
  }
  if (entries.size() != (size_t{1} << n) - 1) {
    throw InvalidArgument("candidate must list every nonempty subset");
  }
}

EntropicCandidate CandidateRepr::ToCandidate() const {
  Validate();
  EntropicCandidate h(n);
  for (const auto& [s, e] : entries) {
    h.Set(s, LogLinValue::Log2(Rational(e.a) / Rational(e.b), Rational(BigInt(1), e.c)));
  }
  return h;
}

CandidateRepr CandidateRepr::FromCandidate(const EntropicCandidate& h,
                                           std::vector<std::string> names) {
  CandidateRepr r;
  r.n = h.n();
  r.variable_names = std::move(names);
  for (uint32_t m = 1; m < (uint32_t{1} << r.n); ++m) {
    LogLinValue::RatioForm f = h.at(VarSet(m)).ToRatioForm();
    r.entries[VarSet(m)] = {f.a, f.b, f.c};
  }
  return r;
}

CandidateRepr ParseCandidateRepr(std::string_view text) {
  std::istringstream in{std::string(text)};
  CandidateRepr r;
  bool header = false;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "candidate line " + std::to_string(line_no) + ": ";
    if (!header) {
      if (tok[0] != "vars" || tok.size() < 2) {
        throw FormatError(where + "expected 'vars' and variable names");
      }
      r.variable_names.assign(tok.begin() + 1, tok.end());
      r.n = static_cast<int>(r.variable_names.size());
      header = true;
      continue;
    }
    if (tok.size() != 4) throw FormatError(where + "expected 'subset a b c'");
    VarSet s;
    try {
      s = ParseVarSet(tok[0], r.variable_names);
    } catch (const Error& e) {
      throw FormatError(where + e.what());
    }
    CandidateRepr::Entry e;
    for (int k = 0; k < 3; ++k) {
      BigInt& v = k == 0 ? e.a : (k == 1 ? e.b : e.c);
      if (tok[k + 1].find_first_not_of("0123456789") != std::string::npos ||
          v.set_str(tok[k + 1], 10) != 0) {
        throw FormatError(where + "bad natural '" + tok[k + 1] + "'");
      }
    }
    if (!r.entries.emplace(s, e).second) {
      throw FormatError(where + "duplicate subset");
    }
  }
  if (!header) throw FormatError("candidate file has no 'vars' line");
  try {
    r.Validate();
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
  return r;
}

std::string FormatCandidateRepr(const CandidateRepr& r) {
  std::string out = "vars";
  for (const auto& v : r.variable_names) out += " " + v;
  out += "\n";
  for (const auto& [s, e] : r.entries) {
    out += FormatVarSet(s, r.variable_names) + " " + e.a.get_str() + " " +
           e.b.get_str() + " " + e.c.get_str() + "\n";
  }
  return out;
}

RecognitionResult CheckCandidate(const CandidateRepr& r,
                                 const GeneratorSet& gens,
                                 const SearchBudget& budget, int workers) {
  const EntropicCandidate h = r.ToCandidate();
  if (gens.n() != h.n()) throw DimensionError("generators and candidate differ");
  RecognitionResult out;
  for (size_t i = 0; i < gens.size(); ++i) {
    LogLinValue v = Eval(gens[i].expr, h);
    if (v.Sign() < 0) {
      out.verdict = Recognition::kRejected;
      out.violated_generator = i;
      out.violation = std::move(v);
      return out;
    }
  }
  SearchBudget dist_only = budget;
  dist_only.vs_max_dim = 0;
  CandidateStream stream = CandidateStream::Refuter(h.n(), dist_only);
  std::optional<Candidate> hit = SearchFirst(
      stream, [&](const EntropicCandidate& g) { return g == h; }, workers);
  if (hit) {
    out.verdict = Recognition::kRealized;
    out.realization = std::move(hit->distribution);
  }
  return out;
}

}  // namespace entropic
