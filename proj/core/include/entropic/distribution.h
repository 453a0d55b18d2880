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

#ifndef ENTROPIC_DISTRIBUTION_H_
#define ENTROPIC_DISTRIBUTION_H_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entropic/entropic_candidate.h"
#include "entropic/rational.h"
#include "entropic/varset.h"

namespace entropic {

// A joint pmf with rational probabilities over n finite variables; variable
// i takes values 0..d_i-1. Outcomes are indexed in mixed radix with
// variable 0 most significant.
class Distribution {
 public:
  // Throws InvalidArgument unless every probability is >= 0 and they sum
  // to exactly 1.
  Distribution(std::vector<int> domain_sizes, std::vector<Rational> pmf);
  // counts[k] / denominator; counts must sum to denominator.
  static Distribution FromCounts(std::vector<int> domain_sizes,
                                 const std::vector<uint64_t>& counts,
                                 uint64_t denominator);

  int n() const { return static_cast<int>(domain_sizes_.size()); }
  const std::vector<int>& domain_sizes() const { return domain_sizes_; }
  size_t num_outcomes() const { return pmf_.size(); }
  const std::vector<Rational>& pmf() const { return pmf_; }
  const Rational& probability(size_t index) const { return pmf_.at(index); }

  // Least common denominator L of the pmf and the integer counts p * L.
  const BigInt& denominator() const { return denominator_; }
  const std::vector<BigInt>& counts() const { return counts_; }

  std::vector<int> Outcome(size_t index) const;
  size_t IndexOf(std::span<const int> outcome) const;

  // Exact marginal on the variables of `s`, kept in their original order.
  Distribution Marginal(VarSet s) const;

  bool operator==(const Distribution& other) const {
    return domain_sizes_ == other.domain_sizes_ && pmf_ == other.pmf_;
  }

 private:
  Distribution() = default;
  void Init();

  std::vector<int> domain_sizes_;
  std::vector<Rational> pmf_;
  BigInt denominator_;
  std::vector<BigInt> counts_;
};

inline Distribution Marginal(const Distribution& d, VarSet s) {
  return d.Marginal(s);
}

// h(alpha) = sum_x p_alpha(x) log2(1 / p_alpha(x)) for every alpha, exactly.
EntropicCandidate EntropicVector(const Distribution& d);

// True when some variable has a value of zero marginal probability. Such a
// distribution has the same entropic vector as one on smaller domains.
bool HasUnusedSymbol(const Distribution& d);

// Stream of all distributions on n variables with every domain size in
// [1, max_support] and every probability a multiple of 1/D' for some
// D' <= max_denominator. Order: increasing D', then increasing number of
// outcome cells prod d_i, then domain tuple lexicographically, then the
// numerator tuple lexicographically. A numerator tuple is emitted at D'
// only when gcd(numerators, D') = 1, so nothing repeats.
class DistributionStream {
 public:
  DistributionStream(int n, int max_support, int max_denominator);
  // Every variable gets exactly `domain` values.
  static DistributionStream UniformDomain(int n, int domain,
                                          int max_denominator);

  std::optional<Distribution> Next();
  // Number of distributions returned so far.
  uint64_t position() const { return position_; }

 private:
  DistributionStream(int n, std::vector<std::vector<int>> domain_tuples,
                     int max_denominator);
  bool Advance();

  int n_;
  int max_denominator_;
  std::vector<std::vector<int>> domain_tuples_;
  int denom_ = 1;
  size_t tuple_ = 0;
  std::vector<uint64_t> counts_;
  bool started_ = false;
  bool done_ = false;
  uint64_t position_ = 0;
};

// A uniformly drawn domain tuple and denominator with a uniformly drawn
// numerator composition; always an element of the matching stream.
Distribution RandomDistribution(int n, int max_support, int max_denominator,
                                std::mt19937_64& rng);

// File format: a header line "vars d_1 ... d_n" followed by lines
// "x_1 ... x_n num/den"; omitted outcomes have probability zero and '#'
// starts a comment.
Distribution ParseDistribution(std::string_view text);
std::string FormatDistribution(const Distribution& d);

}  // namespace entropic

#endif  // ENTROPIC_DISTRIBUTION_H_
