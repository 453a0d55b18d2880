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

#ifndef ENTROPIC_RATIONAL_H_
#define ENTROPIC_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace entropic {

using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p", "p/q" (q > 0 after sign normalization). Throws
// InvalidArgument on anything else, including a zero denominator.
Rational ParseRational(std::string_view text);

// Canonical serialized form, always "num/den" with den > 0 and
// gcd(num, den) = 1. Zero is "0/1".
std::string ToFractionString(const Rational& value);

// Human form: "3", "-1/2".
std::string ToDisplayString(const Rational& value);

// Least common multiple of the denominators of `values` (1 when empty).
template <typename Range>
BigInt CommonDenominator(const Range& values) {
  BigInt l = 1;
  for (const Rational& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

}  // namespace entropic

#endif  // ENTROPIC_RATIONAL_H_
