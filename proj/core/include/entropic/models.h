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

#ifndef ENTROPIC_MODELS_H_
#define ENTROPIC_MODELS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entropic/entropic_candidate.h"
#include "entropic/rational.h"

namespace entropic {

// h(alpha) = sum_{j in alpha} w_j. Throws InvalidArgument on a negative
// weight.
EntropicCandidate Modular(std::span<const Rational> weights);
// h^(j): 1 on every set containing j, 0 elsewhere.
EntropicCandidate BasicModular(int n, int j);

// A basis is a list of row vectors of length d over GF(q).
using Basis = std::vector<std::vector<int>>;

// n subspaces V_1..V_n of GF(q)^d, each given by a basis. The induced
// vector h(alpha) = rank(span of V_i, i in alpha) * log2 q is the entropic
// vector of the uniform distribution on the dual space (a group-
// characterizable system).
class VectorSpaceSystem {
 public:
  // Throws InvalidArgument when q is not prime, an entry is outside
  // [0, q), a vector has the wrong length, or a basis is dependent.
  VectorSpaceSystem(int q, int d, std::vector<Basis> bases);

  int q() const { return q_; }
  int d() const { return d_; }
  int n() const { return static_cast<int>(bases_.size()); }
  const std::vector<Basis>& bases() const { return bases_; }
  bool operator==(const VectorSpaceSystem&) const = default;

 private:
  int q_;
  int d_;
  std::vector<Basis> bases_;
};

// Rank of the row set over GF(q).
int RankModPrime(Basis rows, int q);

EntropicCandidate RankVector(const VectorSpaceSystem& sys);

VectorSpaceSystem RandomVectorSpaceSystem(int q, int d, int n,
                                          std::mt19937_64& rng);

// Every subspace of GF(q)^d as its reduced row echelon basis, ordered by
// dimension, then by pivot columns, then by the free entries.
std::vector<Basis> AllSubspaces(int q, int d);

// All systems of n subspaces for each prime in `primes` (in the given
// order) and each ambient dimension 1..max_dim, tuples in lexicographic
// order over AllSubspaces.
class VectorSpaceStream {
 public:
  VectorSpaceStream(int n, std::vector<int> primes, int max_dim);
  std::optional<VectorSpaceSystem> Next();
  uint64_t position() const { return position_; }

 private:
  bool LoadBlock();

  int n_;
  std::vector<int> primes_;
  int max_dim_;
  size_t prime_idx_ = 0;
  int dim_ = 0;
  std::vector<Basis> subspaces_;
  std::vector<size_t> choice_;
  bool in_block_ = false;
  uint64_t position_ = 0;
};

// File format: header "q d n", then for each subspace a line with its
// dimension k followed by k lines of d entries (one basis vector per line).
VectorSpaceSystem ParseVectorSpaceSystem(std::string_view text);
std::string FormatVectorSpaceSystem(const VectorSpaceSystem& sys);

}  // namespace entropic

#endif  // ENTROPIC_MODELS_H_
