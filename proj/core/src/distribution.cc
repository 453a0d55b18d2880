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

#include "entropic/distribution.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "entropic/errors.h"

namespace entropic {
namespace {

size_t CellCount(const std::vector<int>& domains) {
  size_t k = 1;
  for (int d : domains) k *= static_cast<size_t>(d);
  return k;
}

void CheckDomains(const std::vector<int>& domains) {
  if (domains.size() > static_cast<size_t>(kMaxVariables)) {
    throw InvalidArgument("too many variables");
  }
  for (int d : domains) {
    if (d < 1) throw InvalidArgument("domain sizes must be at least 1");
  }
}

// Adds p * log2(m) into `acc`, keyed by prime, for a small integer m.
void AccumulateCountLog(uint64_t m, std::map<uint64_t, BigInt>& acc) {
  for (const auto& [p, e] : FactorizeSmall(m)) {
    acc[p] += BigInt(static_cast<unsigned long>(m)) * e;
  }
}

LogLinValue EntropyFromCounts(const std::vector<BigInt>& counts,
                              const BigInt& total) {
  // h = log2 L - (1/L) sum_m m log2 m.
  LogLinValue h = LogLinValue::Log2(Rational(total));
  const Rational inv(BigInt(1), total);
  if (mpz_fits_ulong_p(total.get_mpz_t())) {
    std::map<uint64_t, BigInt> acc;
    for (const BigInt& m : counts) {
      if (m > 1) AccumulateCountLog(m.get_ui(), acc);
    }
    for (const auto& [p, s] : acc) {
      h.AddPrime(BigInt(static_cast<unsigned long>(p)), -Rational(s) * inv);
    }
    return h;
  }
  for (const BigInt& m : counts) {
    if (m > 1) h -= LogLinValue::Log2(Rational(m), Rational(m) * inv);
  }
  return h;
}

}  // namespace

Distribution::Distribution(std::vector<int> domain_sizes,
                           std::vector<Rational> pmf)
    : domain_sizes_(std::move(domain_sizes)), pmf_(std::move(pmf)) {
  CheckDomains(domain_sizes_);
  if (pmf_.size() != CellCount(domain_sizes_)) {
    throw InvalidArgument("pmf length does not match the domain sizes");
  }
  Rational total = 0;
  for (const Rational& p : pmf_) {
    if (p < 0) throw InvalidArgument("negative probability");
    total += p;
  }
  if (total != 1) {
    throw InvalidArgument("probabilities sum to " + ToDisplayString(total) +
                          ", not 1");
  }
  Init();
}

Distribution Distribution::FromCounts(std::vector<int> domain_sizes,
                                      const std::vector<uint64_t>& counts,
                                      uint64_t denominator) {
  CheckDomains(domain_sizes);
  if (counts.size() != CellCount(domain_sizes)) {
    throw InvalidArgument("count vector length does not match the domains");
  }
  uint64_t sum = 0;
  for (uint64_t c : counts) sum += c;
  if (denominator == 0 || sum != denominator) {
    throw InvalidArgument("counts do not sum to the denominator");
  }
  Distribution d;
  d.domain_sizes_ = std::move(domain_sizes);
  d.pmf_.reserve(counts.size());
  const BigInt den(static_cast<unsigned long>(denominator));
  for (uint64_t c : counts) {
    Rational p(BigInt(static_cast<unsigned long>(c)), den);
    p.canonicalize();
    d.pmf_.push_back(p);
  }
  d.Init();
  return d;
}

void Distribution::Init() {
  denominator_ = CommonDenominator(pmf_);
  counts_.clear();
  counts_.reserve(pmf_.size());
  for (const Rational& p : pmf_) {
    counts_.push_back(p.get_num() * (denominator_ / p.get_den()));
  }
}

std::vector<int> Distribution::Outcome(size_t index) const {
  std::vector<int> out(domain_sizes_.size());
  for (size_t i = domain_sizes_.size(); i-- > 0;) {
    out[i] = static_cast<int>(index % domain_sizes_[i]);
    index /= domain_sizes_[i];
  }
  return out;
}

size_t Distribution::IndexOf(std::span<const int> outcome) const {
  if (outcome.size() != domain_sizes_.size()) {
    throw DimensionError("outcome tuple has the wrong length");
  }
  size_t index = 0;
  for (size_t i = 0; i < outcome.size(); ++i) {
    if (outcome[i] < 0 || outcome[i] >= domain_sizes_[i]) {
      throw InvalidArgument("outcome value outside the domain");
    }
    index = index * domain_sizes_[i] + outcome[i];
  }
  return index;
}

Distribution Distribution::Marginal(VarSet s) const {
  if (s.Span() > n()) throw DimensionError("marginal set outside the variables");
  std::vector<int> members = s.Members();
  std::vector<int> sub_domains;
  for (int i : members) sub_domains.push_back(domain_sizes_[i]);
  std::vector<Rational> sub(CellCount(sub_domains), Rational(0));
  for (size_t k = 0; k < pmf_.size(); ++k) {
    if (pmf_[k] == 0) continue;
    std::vector<int> x = Outcome(k);
    size_t idx = 0;
    for (size_t j = 0; j < members.size(); ++j) {
      idx = idx * sub_domains[j] + x[members[j]];
    }
    sub[idx] += pmf_[k];
  }
  Distribution out;
  out.domain_sizes_ = std::move(sub_domains);
  out.pmf_ = std::move(sub);
  out.Init();
  return out;
}

EntropicCandidate EntropicVector(const Distribution& d) {
  const int n = d.n();
  EntropicCandidate h(n);
  const size_t cells = d.num_outcomes();
  // Stride of each variable in the full index.
  std::vector<size_t> stride(n);
  for (int i = n - 1, s = 1; i >= 0; --i) {
    stride[i] = static_cast<size_t>(s);
    s *= d.domain_sizes()[i];
  }
  std::vector<std::vector<int>> outcomes;
  outcomes.reserve(cells);
  for (size_t k = 0; k < cells; ++k) outcomes.push_back(d.Outcome(k));

  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    VarSet s(mask);
    std::vector<int> members = s.Members();
    size_t sub_cells = 1;
    for (int i : members) sub_cells *= d.domain_sizes()[i];
    std::vector<BigInt> marg(sub_cells, BigInt(0));
    for (size_t k = 0; k < cells; ++k) {
      const BigInt& c = d.counts()[k];
      if (c == 0) continue;
      size_t idx = 0;
      for (int i : members) idx = idx * d.domain_sizes()[i] + outcomes[k][i];
      marg[idx] += c;
    }
    h.Set(s, EntropyFromCounts(marg, d.denominator()));
  }
  return h;
}

bool HasUnusedSymbol(const Distribution& d) {
  for (int i = 0; i < d.n(); ++i) {
    std::vector<bool> used(d.domain_sizes()[i], false);
    for (size_t k = 0; k < d.num_outcomes(); ++k) {
      if (d.counts()[k] != 0) used[d.Outcome(k)[i]] = true;
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) return true;
  }
  return false;
}

DistributionStream::DistributionStream(int n, int max_support,
                                       int max_denominator)
    : n_(n), max_denominator_(max_denominator) {
  if (n < 1 || n > kMaxVariables) throw InvalidArgument("bad variable count");
  if (max_support < 1 || max_denominator < 1) {
    done_ = true;
    return;
  }
  std::vector<int> t(n, 1);
  while (true) {
    domain_tuples_.push_back(t);
    int i = n - 1;
    while (i >= 0 && t[i] == max_support) t[i--] = 1;
    if (i < 0) break;
    ++t[i];
  }
  std::stable_sort(domain_tuples_.begin(), domain_tuples_.end(),
                   [](const auto& a, const auto& b) {
                     return CellCount(a) < CellCount(b);
                   });
}

DistributionStream::DistributionStream(int n,
                                       std::vector<std::vector<int>> tuples,
                                       int max_denominator)
    : n_(n), max_denominator_(max_denominator), domain_tuples_(std::move(tuples)) {
  if (max_denominator < 1) done_ = true;
}

DistributionStream DistributionStream::UniformDomain(int n, int domain,
                                                     int max_denominator) {
  if (n < 1 || n > kMaxVariables) throw InvalidArgument("bad variable count");
  if (domain < 1) return DistributionStream(n, {}, 0);
  return DistributionStream(n, {std::vector<int>(n, domain)}, max_denominator);
}

// Moves counts_ to the next lexicographic composition, crossing into the
// next domain tuple and denominator as needed.
bool DistributionStream::Advance() {
  if (!started_) {
    started_ = true;
    if (domain_tuples_.empty()) return false;
    denom_ = 1;
    tuple_ = 0;
    counts_.assign(CellCount(domain_tuples_[0]), 0);
    counts_.back() = 1;
    return true;
  }
  size_t last = counts_.size();
  while (last-- > 0 && counts_[last] == 0) {
  }
  if (last > 0) {
    uint64_t suffix = counts_[last];
    counts_[last] = 0;
    ++counts_[last - 1];
    counts_.back() = suffix - 1;
    return true;
  }
  if (++tuple_ == domain_tuples_.size()) {
    tuple_ = 0;
    if (++denom_ > max_denominator_) return false;
  }
  counts_.assign(CellCount(domain_tuples_[tuple_]), 0);
  counts_.back() = static_cast<uint64_t>(denom_);
  return true;
}

std::optional<Distribution> DistributionStream::Next() {
  while (!done_) {
    if (!Advance()) {
      done_ = true;
      break;
    }
    uint64_t g = static_cast<uint64_t>(denom_);
    for (uint64_t c : counts_) g = std::gcd(g, c);
    if (g != 1) continue;
    ++position_;
    return Distribution::FromCounts(domain_tuples_[tuple_], counts_,
                                    static_cast<uint64_t>(denom_));
  }
  return std::nullopt;
}

Distribution RandomDistribution(int n, int max_support, int max_denominator,
                                std::mt19937_64& rng) {
  if (n < 1 || max_support < 1 || max_denominator < 1) {
    throw InvalidArgument("bad random distribution parameters");
  }
  std::uniform_int_distribution<int> dom(1, max_support);
  std::uniform_int_distribution<int> den(1, max_denominator);
  std::vector<int> domains(n);
  for (int& d : domains) d = dom(rng);
  const size_t cells = CellCount(domains);
  const uint64_t denominator = static_cast<uint64_t>(den(rng));
  // Stars and bars: choose cells-1 bar positions among denominator+cells-1.
  std::vector<uint64_t> slots(denominator + cells - 1);
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<uint64_t> bars(slots.begin(), slots.begin() + (cells - 1));
  std::sort(bars.begin(), bars.end());
  std::vector<uint64_t> counts(cells);
  uint64_t prev = 0;
  for (size_t i = 0; i + 1 < cells; ++i) {
    counts[i] = bars[i] - prev;
    prev = bars[i] + 1;
  }
  counts[cells - 1] = denominator + cells - 1 - prev;
  return Distribution::FromCounts(std::move(domains), counts, denominator);
}

Distribution ParseDistribution(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<int> domains;
  bool have_header = false;
  std::vector<std::pair<std::vector<int>, Rational>> entries;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    auto fail = [&](const std::string& what) {
      return FormatError("distribution line " + std::to_string(line_no) +
                         ": " + what);
    };
    if (!have_header) {
      if (tokens[0] != "vars") throw fail("expected 'vars d_1 ... d_n'");
      for (size_t i = 1; i < tokens.size(); ++i) {
        try {
          domains.push_back(std::stoi(tokens[i]));
        } catch (const std::exception&) {
          throw fail("bad domain size '" + tokens[i] + "'");
        }
      }
      if (domains.empty()) throw fail("no variables declared");
      have_header = true;
      continue;
    }
    if (tokens.size() != domains.size() + 1) {
      throw fail("expected " + std::to_string(domains.size()) +
                 " outcome values and a probability");
    }
    std::vector<int> x;
    for (size_t i = 0; i < domains.size(); ++i) {
      try {
        x.push_back(std::stoi(tokens[i]));
      } catch (const std::exception&) {
        throw fail("bad outcome value '" + tokens[i] + "'");
      }
    }
    try {
      entries.emplace_back(std::move(x), ParseRational(tokens.back()));
    } catch (const InvalidArgument& e) {
      throw fail(e.what());
    }
  }
  if (!have_header) throw FormatError("distribution file has no header");
  CheckDomains(domains);
  std::vector<Rational> pmf(CellCount(domains), Rational(0));
  for (const auto& [x, p] : entries) {
    size_t idx = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] < 0 || x[i] >= domains[i]) {
        throw FormatError("outcome value outside the declared domain");
      }
      idx = idx * domains[i] + x[i];
    }
    pmf[idx] += p;
  }
  return Distribution(std::move(domains), std::move(pmf));
}

std::string FormatDistribution(const Distribution& d) {
  std::string out = "vars";
  for (int s : d.domain_sizes()) out += " " + std::to_string(s);
  out += "\n";
  for (size_t k = 0; k < d.num_outcomes(); ++k) {
    if (d.probability(k) == 0) continue;
    for (int v : d.Outcome(k)) out += std::to_string(v) + " ";
    out += ToFractionString(d.probability(k)) + "\n";
  }
  return out;
}

}  // namespace entropic
