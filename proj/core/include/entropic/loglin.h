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

#ifndef ENTROPIC_LOGLIN_H_
#define ENTROPIC_LOGLIN_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "entropic/rational.h"

namespace entropic {

// One summand q * log2(r) with r > 0.
struct LogTerm {
  Rational q;
  Rational r;
};

// Exact real of the form sum_i q_i log2 r_i with rational q_i and positive
// rational r_i. Every entropy of a distribution with rational probabilities
// has this form.
//
// The value is stored aggregated per prime, sum_p c_p log2 p with rational
// c_p != 0. Since the logarithms of distinct primes are linearly independent
// over the rationals, the value is zero iff no prime remains, and two values
// are equal iff their maps are equal.
class LogLinValue {
 public:
  // Zero.
  LogLinValue() = default;

  // Throws InvalidArgument if some r_i <= 0.
  static LogLinValue FromTerms(std::span<const LogTerm> terms);
  // q * log2(r).
  static LogLinValue Log2(const Rational& r, const Rational& q = 1);
  // The rational number x, i.e. x * log2(2).
  static LogLinValue FromRational(const Rational& x);

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<BigInt, Rational>& prime_coefficients() const {
    return coeffs_;
  }

  // Exact sign in {-1, 0, +1}. Zero is decided on the prime form; a nonzero
  // value is then enclosed with MPFR interval arithmetic at 64, 128, ...
  // bits until the enclosure excludes zero.
  int Sign() const;

  // Integer form (1/M) sum_p e_p log2 p with M > 0 and gcd(M, e_p...) = 1.
  struct IntegerForm {
    BigInt denominator;
    std::map<BigInt, BigInt> exponents;
  };
  IntegerForm ToIntegerForm() const;

  // Canonical term list (c_p, p), primes ascending.
  std::vector<LogTerm> Terms() const;

  // The rational r with value == log2(r) scaled by 1/M as above:
  // value = (1/M) log2(a/b). Used by the (1/c) log(a/b) representation.
  struct RatioForm {
    BigInt a;
    BigInt b;
    BigInt c;
  };
  RatioForm ToRatioForm() const;

  // Nearest double; for display only.
  double Approximate() const;

  LogLinValue& operator+=(const LogLinValue& other);
  LogLinValue& operator-=(const LogLinValue& other);
  LogLinValue& operator*=(const Rational& scale);
  friend LogLinValue operator+(LogLinValue a, const LogLinValue& b) {
    return a += b;
  }
  friend LogLinValue operator-(LogLinValue a, const LogLinValue& b) {
    return a -= b;
  }
  friend LogLinValue operator*(LogLinValue a, const Rational& s) {
    return a *= s;
  }
  friend LogLinValue operator*(const Rational& s, LogLinValue a) {
    return a *= s;
  }
  LogLinValue operator-() const;
  bool operator==(const LogLinValue& other) const = default;

  // Adds c * log2(p) for a prime p; the caller guarantees primality.
  void AddPrime(const BigInt& p, const Rational& c);

  std::string ToString() const;

 private:
  std::map<BigInt, Rational> coeffs_;
};

// Exact sign of a log-linear value.
inline int Sign(const LogLinValue& v) { return v.Sign(); }

// Sign of sum_p c_p log2 p evaluated with an interval enclosure at `bits`
// of precision: -1 or +1 when the enclosure excludes zero, 0 otherwise.
int IntervalSign(const LogLinValue& v, long bits);

// Prime factorization of n >= 1 (empty for 1). Small arguments use a cached
// sieve; large cofactors fall back to Pollard-Brent rho.
std::vector<std::pair<BigInt, unsigned long>> Factorize(const BigInt& n);
std::vector<std::pair<uint64_t, unsigned>> FactorizeSmall(uint64_t n);

}  // namespace entropic

#endif  // ENTROPIC_LOGLIN_H_
