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

#ifndef ENTROPIC_RECOGNIZER_H_
#define ENTROPIC_RECOGNIZER_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entropic/distribution.h"
#include "entropic/entropic_candidate.h"
#include "entropic/search.h"
#include "entropic/shannon.h"

namespace entropic {

// h(alpha) = (1/c) log2(a / b) for every nonempty alpha, with naturals
// a >= 1, b >= 1, c >= 1. Values below zero are allowed and simply fail
// the nonnegativity tests.
struct CandidateRepr {
  struct Entry {
    BigInt a;
    BigInt b;
    BigInt c;
    bool operator==(const Entry&) const = default;
  };
  int n = 0;
  std::vector<std::string> variable_names;
  std::map<VarSet, Entry> entries;

  // Throws InvalidArgument when a subset is missing or outside [n], or an
  // entry has a, b or c equal to zero.
  void Validate() const;
  EntropicCandidate ToCandidate() const;
  static CandidateRepr FromCandidate(const EntropicCandidate& h,
                                     std::vector<std::string> names);
};

// File format: "vars X Y ..." then one line "subset a b c" per nonempty
// subset, e.g. "XY 4 1 1"; '#' starts a comment.
CandidateRepr ParseCandidateRepr(std::string_view text);
std::string FormatCandidateRepr(const CandidateRepr& r);

enum class Recognition { kRejected, kRealized, kInconclusive };
std::string_view ToString(Recognition r);

struct RecognitionResult {
  Recognition verdict = Recognition::kInconclusive;
  // Index into the generator set and the (negative) value there.
  std::optional<size_t> violated_generator;
  std::optional<LogLinValue> violation;
  std::optional<Distribution> realization;
};

// Rejects when some generator evaluates negative (sound for almost-
// entropic vectors too), accepts when a distribution of the refuter stream
// reproduces every coordinate exactly, and is inconclusive otherwise.
RecognitionResult CheckCandidate(const CandidateRepr& r,
                                 const GeneratorSet& gens,
                                 const SearchBudget& budget = {},
                                 int workers = 1);

}  // namespace entropic

#endif  // ENTROPIC_RECOGNIZER_H_
