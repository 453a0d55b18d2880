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

#include "entropic/search.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "entropic/errors.h"

namespace entropic {
namespace {

constexpr size_t kBatchSize = 64;

int ParsePositive(const std::string& key, const std::string& value) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || v < 0) {
    throw InvalidArgument("budget: bad value '" + value + "' for " + key);
  }
  return v;
}

}  // namespace

std::string SearchBudget::ToString() const {
  std::string out = "s=" + std::to_string(max_support) +
                    ",D=" + std::to_string(max_denominator) +
                    ",vsdim=" + std::to_string(vs_max_dim) + ",vsq=";
  for (size_t i = 0; i < vs_primes.size(); ++i) {
    out += (i ? "," : "") + std::to_string(vs_primes[i]);
  }
  return out;
}

SearchBudget ParseBudget(std::string_view text) {
  SearchBudget b;
  std::string key;
  bool primes_reset = false;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string tok(text.substr(pos, comma - pos));
    pos = comma + 1;
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    std::string value = tok;
    if (auto eq = tok.find('='); eq != std::string::npos) {
      key = tok.substr(0, eq);
      value = tok.substr(eq + 1);
    } else if (key != "vsq") {
      throw InvalidArgument("budget: stray token '" + tok + "'");
    }
    if (key == "s") {
      b.max_support = ParsePositive(key, value);
    } else if (key == "D") {
      b.max_denominator = ParsePositive(key, value);
    } else if (key == "vsdim") {
      b.vs_max_dim = ParsePositive(key, value);
    } else if (key == "vsq") {
      if (!primes_reset) b.vs_primes.clear();
      primes_reset = true;
      b.vs_primes.push_back(ParsePositive(key, value));
    } else {
      throw InvalidArgument("budget: unknown key '" + key + "'");
    }
  }
  return b;
}

std::string_view ToString(CandidateSource s) {
  switch (s) {
    case CandidateSource::kDistribution:
      return "distribution";
    case CandidateSource::kVectorSpace:
      return "vector-space";
    case CandidateSource::kModular:
      return "modular";
  }
  return "?";
}

void Candidate::ComputeVector() {
  if (distribution) {
    h = EntropicVector(*distribution);
  } else if (system) {
    h = RankVector(*system);
  } else {
    h = Modular(weights);
  }
}

CandidateStream CandidateStream::Refuter(int n, const SearchBudget& budget) {
  CandidateStream s;
  s.n_ = n;
  s.prune_unused_ = true;
  s.dists_.emplace_back(n, budget.max_support, budget.max_denominator);
  if (budget.vs_max_dim > 0 && !budget.vs_primes.empty()) {
    s.systems_.emplace(n, budget.vs_primes, budget.vs_max_dim);
  }
  return s;
}

CandidateStream CandidateStream::UniformDomains(int n, int max_n,
                                                int max_denominator) {
  CandidateStream s;
  s.n_ = n;
  for (int d = 1; d <= max_n; ++d) {
    s.dists_.push_back(DistributionStream::UniformDomain(n, d, max_denominator));
  }
  return s;
}

std::optional<Candidate> CandidateStream::Next() {
  while (dist_idx_ < dists_.size()) {
    std::optional<Distribution> d = dists_[dist_idx_].Next();
    if (!d) {
      ++dist_idx_;
      continue;
    }
    if (prune_unused_ && HasUnusedSymbol(*d)) continue;
    Candidate c;
    c.source = CandidateSource::kDistribution;
    c.index = next_index_++;
    c.distribution = std::move(d);
    return c;
  }
  if (systems_) {
    if (std::optional<VectorSpaceSystem> v = systems_->Next()) {
      Candidate c;
      c.source = CandidateSource::kVectorSpace;
      c.index = next_index_++;
      c.system = std::move(v);
      return c;
    }
    systems_.reset();
  }
  return std::nullopt;
}

int ResolveWorkers(int requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<Candidate> SearchFirst(CandidateStream& stream,
                                     const CandidatePredicate& pred,
                                     int workers, uint64_t limit) {
  workers = ResolveWorkers(workers);
  std::mutex mu;
  uint64_t taken = 0;
  bool exhausted = false;
  std::optional<Candidate> best;
  std::atomic<uint64_t> best_index{std::numeric_limits<uint64_t>::max()};
  std::exception_ptr failure;

  // Batches leave the stream in order, so once a hit is known every batch
  // starting below it has already been handed out and will be finished.
  auto pull = [&](std::vector<Candidate>& batch) {
    std::lock_guard<std::mutex> lock(mu);
    batch.clear();
    if (exhausted || failure) return;
    while (batch.size() < kBatchSize && (limit == 0 || taken < limit)) {
      std::optional<Candidate> c = stream.Next();
      if (!c) {
        exhausted = true;
        break;
      }
      if (c->index >= best_index.load()) {
        exhausted = true;
        break;
      }
      ++taken;
      batch.push_back(std::move(*c));
    }
  };
  auto work = [&]() {
    std::vector<Candidate> batch;
    try {
      while (true) {
        pull(batch);
        if (batch.empty()) return;
        for (Candidate& c : batch) {
          if (c.index >= best_index.load()) break;
          c.ComputeVector();
          if (!pred(c.h)) continue;
          std::lock_guard<std::mutex> lock(mu);
          if (c.index < best_index.load()) {
            best_index.store(c.index);
            best = std::move(c);
          }
          break;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return best;
}

}  // namespace entropic
