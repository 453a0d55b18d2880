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

#include "entropic/models.h"

#include <algorithm>
#include <sstream>

#include "entropic/errors.h"

namespace entropic {
namespace {

bool IsPrime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

int Inverse(int a, int q) {
  // Fermat: a^(q-2) mod q.
  long long r = 1, b = a % q;
  for (int e = q - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
  }
  return static_cast<int>(r);
}

// In-place reduced row echelon form over GF(q); returns the rank and drops
// the zero rows.
int Rref(Basis& rows, int q) {
  if (rows.empty()) return 0;
  const int d = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] % q != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const int inv = Inverse(rows[rank][col], q);
    for (int& x : rows[rank]) x = static_cast<int>(1LL * x * inv % q);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int f = rows[r][col];
      for (int c = 0; c < d; ++c) {
        rows[r][c] = static_cast<int>(
            ((rows[r][c] - 1LL * f * rows[rank][c]) % q + q) % q);
      }
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

}  // namespace

EntropicCandidate Modular(std::span<const Rational> weights) {
  const int n = static_cast<int>(weights.size());
  if (n > kMaxVariables) throw InvalidArgument("too many variables");
  for (const Rational& w : weights) {
    if (w < 0) throw InvalidArgument("modular weights must be nonnegative");
  }
  EntropicCandidate h(n);
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    Rational v = 0;
    for (int j : VarSet(mask).Members()) v += weights[j];
    h.Set(VarSet(mask), LogLinValue::FromRational(v));
  }
  return h;
}

EntropicCandidate BasicModular(int n, int j) {
  if (j < 0 || j >= n) throw InvalidArgument("variable index out of range");
  std::vector<Rational> w(n, Rational(0));
  w[j] = 1;
  return Modular(w);
}

VectorSpaceSystem::VectorSpaceSystem(int q, int d, std::vector<Basis> bases)
    : q_(q), d_(d), bases_(std::move(bases)) {
  if (!IsPrime(q)) throw InvalidArgument("field size must be prime");
  if (d < 0) throw InvalidArgument("negative ambient dimension");
  if (static_cast<int>(bases_.size()) > kMaxVariables) {
    throw InvalidArgument("too many subspaces");
  }
  for (const Basis& b : bases_) {
    for (const auto& v : b) {
      if (static_cast<int>(v.size()) != d) {
        throw InvalidArgument("basis vector has the wrong length");
      }
      for (int x : v) {
        if (x < 0 || x >= q) throw InvalidArgument("entry outside [0, q)");
      }
    }
    if (RankModPrime(b, q) != static_cast<int>(b.size())) {
      throw InvalidArgument("basis vectors are linearly dependent");
    }
  }
}

int RankModPrime(Basis rows, int q) {
  for (auto& r : rows) {
    for (int& x : r) x = ((x % q) + q) % q;
  }
  return Rref(rows, q);
}

EntropicCandidate RankVector(const VectorSpaceSystem& sys) {
  const int n = sys.n();
  EntropicCandidate h(n);
  const LogLinValue log_q = LogLinValue::Log2(Rational(sys.q()));
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    Basis rows;
    for (int i : VarSet(mask).Members()) {
      rows.insert(rows.end(), sys.bases()[i].begin(), sys.bases()[i].end());
    }
    const int r = RankModPrime(std::move(rows), sys.q());
    h.Set(VarSet(mask), log_q * Rational(r));
  }
  return h;
}

VectorSpaceSystem RandomVectorSpaceSystem(int q, int d, int n,
                                          std::mt19937_64& rng) {
  if (!IsPrime(q) || d < 0 || n < 1) {
    throw InvalidArgument("bad random system parameters");
  }
  std::uniform_int_distribution<int> dim(0, d);
  std::uniform_int_distribution<int> entry(0, q - 1);
  std::vector<Basis> bases;
  for (int i = 0; i < n; ++i) {
    const int k = dim(rng);
    Basis b;
    while (static_cast<int>(b.size()) < k) {
      std::vector<int> v(d);
      for (int& x : v) x = entry(rng);
      b.push_back(v);
      if (RankModPrime(b, q) != static_cast<int>(b.size())) b.pop_back();
    }
    bases.push_back(std::move(b));
  }
  return VectorSpaceSystem(q, d, std::move(bases));
}

std::vector<Basis> AllSubspaces(int q, int d) {
  std::vector<Basis> out;
  out.push_back({});
  for (int k = 1; k <= d; ++k) {
    // Pivot sets in lexicographic order.
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      // Free positions: row r, columns c > piv[r] not in piv.
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r) {
        for (int c = piv[r] + 1; c < d; ++c) {
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) {
            free.emplace_back(r, c);
          }
        }
      }
      std::vector<int> vals(free.size(), 0);
      while (true) {
        Basis b(k, std::vector<int>(d, 0));
        for (int r = 0; r < k; ++r) b[r][piv[r]] = 1;
        for (size_t f = 0; f < free.size(); ++f) {
          b[free[f].first][free[f].second] = vals[f];
        }
        out.push_back(std::move(b));
        size_t f = free.size();
        while (f > 0 && vals[f - 1] == q - 1) vals[--f] = 0;
        if (f == 0) break;
        ++vals[f - 1];
      }
      int i = k - 1;
      while (i >= 0 && piv[i] == d - k + i) --i;
      if (i < 0) break;
      ++piv[i];
      for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

VectorSpaceStream::VectorSpaceStream(int n, std::vector<int> primes,
                                     int max_dim)
    : n_(n), primes_(std::move(primes)), max_dim_(max_dim) {
  if (n < 1 || n > kMaxVariables) throw InvalidArgument("bad variable count");
  for (int q : primes_) {
    if (!IsPrime(q)) throw InvalidArgument("field size must be prime");
  }
}

bool VectorSpaceStream::LoadBlock() {
  while (prime_idx_ < primes_.size()) {
    if (++dim_ <= max_dim_) {
      subspaces_ = AllSubspaces(primes_[prime_idx_], dim_);
      choice_.assign(n_, 0);
      in_block_ = true;
      return true;
    }
    dim_ = 0;
    ++prime_idx_;
  }
  return false;
}

std::optional<VectorSpaceSystem> VectorSpaceStream::Next() {
  if (in_block_) {
    size_t i = choice_.size();
    while (i > 0 && choice_[i - 1] + 1 == subspaces_.size()) choice_[--i] = 0;
    if (i == 0) {
      in_block_ = false;
    } else {
      ++choice_[i - 1];
    }
  }
  if (!in_block_ && !LoadBlock()) return std::nullopt;
  std::vector<Basis> bases;
  for (size_t c : choice_) bases.push_back(subspaces_[c]);
  ++position_;
  return VectorSpaceSystem(primes_[prime_idx_], dim_, std::move(bases));
}

VectorSpaceSystem ParseVectorSpaceSystem(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<long long> nums;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    for (std::string tok; ls >> tok;) {
      try {
        size_t used = 0;
        nums.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw FormatError("system file: bad integer '" + tok + "'");
      }
    }
  }
  size_t pos = 0;
  auto take = [&]() -> long long {
    if (pos >= nums.size()) throw FormatError("system file: truncated");
    return nums[pos++];
  };
  const int q = static_cast<int>(take());
  const int d = static_cast<int>(take());
  const int n = static_cast<int>(take());
  if (q < 2 || d < 0 || n < 1 || n > kMaxVariables) {
    throw FormatError("system file: bad header");
  }
  std::vector<Basis> bases(n);
  for (int i = 0; i < n; ++i) {
    const long long k = take();
    if (k < 0 || k > d) throw FormatError("system file: bad subspace dimension");
    for (long long r = 0; r < k; ++r) {
      std::vector<int> v(d);
      for (int& x : v) x = static_cast<int>(((take() % q) + q) % q);
      bases[i].push_back(std::move(v));
    }
  }
  if (pos != nums.size()) throw FormatError("system file: trailing data");
  try {
    return VectorSpaceSystem(q, d, std::move(bases));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("system file: ") + e.what());
  }
}

std::string FormatVectorSpaceSystem(const VectorSpaceSystem& sys) {
  std::ostringstream out;
  out << sys.q() << ' ' << sys.d() << ' ' << sys.n() << '\n';
  for (const Basis& b : sys.bases()) {
    out << b.size() << '\n';
    for (const auto& v : b) {
      for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace entropic
