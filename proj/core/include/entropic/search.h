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

#ifndef ENTROPIC_SEARCH_H_
#define ENTROPIC_SEARCH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entropic/distribution.h"
#include "entropic/entropic_candidate.h"
#include "entropic/models.h"

namespace entropic {

// Bounds for the exhaustive candidate streams: distributions with domain
// sizes <= max_support and probabilities with denominator <= max_denominator,
// then vector-space systems of ambient dimension <= vs_max_dim over each
// prime in vs_primes.
struct SearchBudget {
  int max_support = 2;
  int max_denominator = 4;
  int vs_max_dim = 0;
  std::vector<int> vs_primes = {2};

  // Canonical "s=2,D=4,vsdim=0,vsq=2".
  std::string ToString() const;
  bool operator==(const SearchBudget&) const = default;
};

// Parses "s=3,D=6,vsdim=3,vsq=2,3"; a comma-separated token without '='
// extends the list of the preceding key. Unset keys keep their defaults.
SearchBudget ParseBudget(std::string_view text);

enum class CandidateSource { kDistribution, kVectorSpace, kModular };
std::string_view ToString(CandidateSource s);

// One point of a candidate stream together with its entropic vector.
struct Candidate {
  CandidateSource source = CandidateSource::kDistribution;
  // Position in the stream, counted from 0.
  uint64_t index = 0;
  std::optional<Distribution> distribution;
  std::optional<VectorSpaceSystem> system;
  std::vector<Rational> weights;
  EntropicCandidate h;

  // Computes h from whichever model is present.
  void ComputeVector();
};

// A canonical, resumable sequence of candidates (h is not yet computed).
class CandidateStream {
 public:
  // The refuter order: distributions of DistributionStream(n, s, D) without
  // unused symbols, then every VectorSpaceStream(n, vs_primes, vs_max_dim)
  // system. Dropping distributions with an unused symbol loses nothing: the
  // same vector appears earlier on smaller domains with the same D'.
  static CandidateStream Refuter(int n, const SearchBudget& budget);
  // Distributions with every domain of size exactly N, for N = 1..max_n,
  // each with denominators up to max_denominator.
  static CandidateStream UniformDomains(int n, int max_n, int max_denominator);

  std::optional<Candidate> Next();
  uint64_t consumed() const { return next_index_; }

 private:
  CandidateStream() = default;

  int n_ = 0;
  bool prune_unused_ = false;
  std::vector<DistributionStream> dists_;
  size_t dist_idx_ = 0;
  std::optional<VectorSpaceStream> systems_;
  uint64_t next_index_ = 0;
};

using CandidatePredicate = std::function<bool(const EntropicCandidate&)>;

// Consumes up to `limit` candidates (0 = no limit) and returns the first,
// in stream order, whose vector satisfies `pred`. With several workers the
// stream is handed out in batches; the answer does not depend on `workers`.
std::optional<Candidate> SearchFirst(CandidateStream& stream,
                                     const CandidatePredicate& pred,
                                     int workers = 1, uint64_t limit = 0);

// Worker count for `requested` <= 0: the hardware concurrency.
int ResolveWorkers(int requested);

}  // namespace entropic

#endif  // ENTROPIC_SEARCH_H_
