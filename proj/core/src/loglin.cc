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

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <vector>

#include "entropic/errors.h"
#include "entropic/loglin.h"

namespace entropic {
namespace {

constexpr uint32_t kSieveLimit = 1u << 20;

// Smallest prime factor table for [0, kSieveLimit).
const std::vector<uint32_t>& SmallestPrimeFactors() {
  static const std::vector<uint32_t> table = [] {
    std::vector<uint32_t> spf(kSieveLimit, 0);
    for (uint32_t i = 2; i < kSieveLimit; ++i) {
      if (spf[i] != 0) continue;
      for (uint64_t j = i; j < kSieveLimit; j += i) {
        if (spf[j] == 0) spf[j] = i;
      }
    }
    return spf;
  }();
  return table;
}

const std::vector<uint32_t>& TrialPrimes() {
  static const std::vector<uint32_t> primes = [] {
    const auto& spf = SmallestPrimeFactors();
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i < (1u << 16); ++i) {
      if (spf[i] == i) out.push_back(i);
    }
    return out;
  }();
  return primes;
}

BigInt PollardBrent(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const BigInt& v) {
      BigInt t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          BigInt diff = x - y;
          mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        BigInt diff = x - ys;
        mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void FactorLarge(const BigInt& n, std::map<BigInt, unsigned long>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    out[n] += 1;
    return;
  }
  BigInt d = PollardBrent(n);
  FactorLarge(d, out);
  FactorLarge(BigInt(n / d), out);
}

// Accumulates q * log2(n) for an integer n >= 1 into `coeffs`.
void AccumulateLog(const BigInt& n, const Rational& q,
                   std::map<BigInt, Rational>& coeffs) {
  for (const auto& [p, e] : Factorize(n)) {
    Rational& c = coeffs[p];
    c += q * e;
    if (c == 0) coeffs.erase(p);
  }
}

// RAII wrapper for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(long bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

std::vector<std::pair<uint64_t, unsigned>> FactorizeSmall(uint64_t n) {
  std::vector<std::pair<uint64_t, unsigned>> out;
  if (n < kSieveLimit) {
    const auto& spf = SmallestPrimeFactors();
    while (n > 1) {
      uint32_t p = spf[n];
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    return out;
  }
  for (const auto& [p, e] : Factorize(BigInt(std::to_string(n)))) {
    out.emplace_back(p.get_ui(), static_cast<unsigned>(e));
  }
  return out;
}

std::vector<std::pair<BigInt, unsigned long>> Factorize(const BigInt& n) {
  if (n < 1) throw InvalidArgument("factorization of a non-positive integer");
  std::vector<std::pair<BigInt, unsigned long>> out;
  if (mpz_fits_ulong_p(n.get_mpz_t()) && n < kSieveLimit) {
    for (const auto& [p, e] : FactorizeSmall(n.get_ui())) {
      out.emplace_back(BigInt(static_cast<unsigned long>(p)), e);
    }
    return out;
  }
  std::map<BigInt, unsigned long> acc;
  BigInt m = n;
  for (uint32_t p : TrialPrimes()) {
    if (BigInt(static_cast<unsigned long>(p)) *
            static_cast<unsigned long>(p) >
        m) {
      break;
    }
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned long e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      acc[BigInt(static_cast<unsigned long>(p))] += e;
    }
  }
  if (m > 1) {
    // No factor below 2^16 remains, so anything under 2^32 is prime.
    if (mpz_sizeinbase(m.get_mpz_t(), 2) <= 32) {
      acc[m] += 1;
    } else {
      FactorLarge(m, acc);
    }
  }
  out.assign(acc.begin(), acc.end());
  return out;
}

LogLinValue LogLinValue::FromTerms(std::span<const LogTerm> terms) {
  LogLinValue v;
  for (const LogTerm& t : terms) {
    if (t.r <= 0) {
      throw InvalidArgument("logarithm of a non-positive rational");
    }
    if (t.q == 0) continue;
    AccumulateLog(t.r.get_num(), t.q, v.coeffs_);
    AccumulateLog(t.r.get_den(), -t.q, v.coeffs_);
  }
  return v;
}

LogLinValue LogLinValue::Log2(const Rational& r, const Rational& q) {
  LogTerm t{q, r};
  return FromTerms(std::span<const LogTerm>(&t, 1));
}

LogLinValue LogLinValue::FromRational(const Rational& x) {
  LogLinValue v;
  if (x != 0) v.coeffs_.emplace(BigInt(2), x);
  return v;
}

void LogLinValue::AddPrime(const BigInt& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LogLinValue& LogLinValue::operator+=(const LogLinValue& other) {
  for (const auto& [p, c] : other.coeffs_) AddPrime(p, c);
  return *this;
}

LogLinValue& LogLinValue::operator-=(const LogLinValue& other) {
  for (const auto& [p, c] : other.coeffs_) AddPrime(p, -c);
  return *this;
}

LogLinValue& LogLinValue::operator*=(const Rational& scale) {
  if (scale == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, c] : coeffs_) c *= scale;
  return *this;
}

LogLinValue LogLinValue::operator-() const {
  LogLinValue out = *this;
  for (auto& [p, c] : out.coeffs_) c = -c;
  return out;
}

int IntervalSign(const LogLinValue& v, long bits) {
  Mpfr lo_sum(bits), hi_sum(bits), lo_term(bits), hi_term(bits);
  Mpfr c_lo(bits), c_hi(bits), l_lo(bits), l_hi(bits);
  mpfr_set_zero(lo_sum.get(), 1);
  mpfr_set_zero(hi_sum.get(), 1);
  for (const auto& [p, c] : v.prime_coefficients()) {
    mpfr_set_z(l_lo.get(), p.get_mpz_t(), MPFR_RNDD);
    mpfr_log2(l_lo.get(), l_lo.get(), MPFR_RNDD);
    mpfr_set_z(l_hi.get(), p.get_mpz_t(), MPFR_RNDU);
    mpfr_log2(l_hi.get(), l_hi.get(), MPFR_RNDU);
    mpfr_set_q(c_lo.get(), c.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(c_hi.get(), c.get_mpq_t(), MPFR_RNDU);
    // log2 p >= 1, so only the sign of c decides which endpoints pair up.
    if (c > 0) {
      mpfr_mul(lo_term.get(), c_lo.get(), l_lo.get(), MPFR_RNDD);
      mpfr_mul(hi_term.get(), c_hi.get(), l_hi.get(), MPFR_RNDU);
    } else {
      mpfr_mul(lo_term.get(), c_lo.get(), l_hi.get(), MPFR_RNDD);
      mpfr_mul(hi_term.get(), c_hi.get(), l_lo.get(), MPFR_RNDU);
    }
    mpfr_add(lo_sum.get(), lo_sum.get(), lo_term.get(), MPFR_RNDD);
    mpfr_add(hi_sum.get(), hi_sum.get(), hi_term.get(), MPFR_RNDU);
  }
  if (mpfr_sgn(lo_sum.get()) > 0) return 1;
  if (mpfr_sgn(hi_sum.get()) < 0) return -1;
  return 0;
}

int LogLinValue::Sign() const {
  if (coeffs_.empty()) return 0;
  bool any_pos = false, any_neg = false;
  for (const auto& [p, c] : coeffs_) {
    (c > 0 ? any_pos : any_neg) = true;
  }
  if (!any_neg) return 1;
  if (!any_pos) return -1;
  for (long bits = 64; bits <= (1L << 14); bits *= 2) {
    if (int s = IntervalSign(*this, bits); s != 0) return s;
  }
  // Exact fallback: compare prod_{e>0} p^e against prod_{e<0} p^-e.
  RatioForm f = ToRatioForm();
  return cmp(f.a, f.b) > 0 ? 1 : -1;
}

LogLinValue::IntegerForm LogLinValue::ToIntegerForm() const {
  IntegerForm f;
  f.denominator = 1;
  for (const auto& [p, c] : coeffs_) {
    mpz_lcm(f.denominator.get_mpz_t(), f.denominator.get_mpz_t(),
            c.get_den_mpz_t());
  }
  BigInt g = f.denominator;
  for (const auto& [p, c] : coeffs_) {
    BigInt e = c.get_num() * (f.denominator / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    f.exponents.emplace(p, e);
  }
  if (g > 1) {
    f.denominator /= g;
    for (auto& [p, e] : f.exponents) e /= g;
  }
  return f;
}

LogLinValue::RatioForm LogLinValue::ToRatioForm() const {
  IntegerForm f = ToIntegerForm();
  RatioForm r{1, 1, f.denominator};
  for (const auto& [p, e] : f.exponents) {
    BigInt power;
    BigInt abs_e = abs(e);
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), abs_e.get_ui());
    (e > 0 ? r.a : r.b) *= power;
  }
  return r;
}

std::vector<LogTerm> LogLinValue::Terms() const {
  std::vector<LogTerm> out;
  out.reserve(coeffs_.size());
  for (const auto& [p, c] : coeffs_) out.push_back({c, Rational(p)});
  return out;
}

double LogLinValue::Approximate() const {
  double sum = 0;
  for (const auto& [p, c] : coeffs_) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, p.get_mpz_t());
    sum += c.get_d() * (std::log2(mant) + static_cast<double>(exp));
  }
  return sum;
}

std::string LogLinValue::ToString() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (p == 2) {
      os << ToDisplayString(mag);
    } else {
      if (mag != 1) os << ToDisplayString(mag) << "*";
      os << "log2(" << p.get_str() << ")";
    }
  }
  return os.str();
}

}  // namespace entropic
