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

#include "entropic/lp.h"

#include "entropic/errors.h"

namespace entropic {
namespace {

// Tableau rows [A | b] over the current basis plus a reduced-cost row.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<int> basis)
      : rows_(std::move(rows)), basis_(std::move(basis)) {}

  size_t num_rows() const { return rows_.size(); }
  size_t num_cols() const { return rows_.empty() ? 0 : rows_[0].size() - 1; }
  const Rational& at(size_t r, size_t c) const { return rows_[r][c]; }
  const Rational& rhs(size_t r) const { return rows_[r].back(); }
  const std::vector<int>& basis() const { return basis_; }

  // Reduced costs d_j = c_j - c_B B^-1 A_j and the current objective.
  void Price(const std::vector<Rational>& cost) {
    reduced_ = cost;
    reduced_.resize(num_cols() + 1, Rational(0));
    reduced_.back() = 0;
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (size_t c = 0; c <= num_cols(); ++c) {
        if (rows_[r][c] != 0) reduced_[c] -= cb * rows_[r][c];
      }
    }
  }
  const Rational& reduced(size_t c) const { return reduced_[c]; }
  // -(objective value) lives in the last slot.
  Rational objective() const { return -reduced_.back(); }

  void Pivot(size_t pr, size_t pc) {
    std::vector<Rational>& prow = rows_[pr];
    const Rational inv = 1 / prow[pc];
    for (Rational& v : prow) {
      if (v != 0) v *= inv;
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[pc] == 0) return;
      const Rational f = row[pc];
      for (size_t c = 0; c < row.size(); ++c) {
        if (prow[c] != 0) row[c] -= f * prow[c];
      }
    };
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (r != pr) eliminate(rows_[r]);
    }
    if (!reduced_.empty()) eliminate(reduced_);
    basis_[pr] = static_cast<int>(pc);
  }

  // Runs Bland's rule restricted to columns < limit. Returns false when
  // the objective is unbounded below.
  bool Optimize(size_t limit) {
    while (true) {
      size_t enter = limit;
      for (size_t c = 0; c < limit; ++c) {
        if (reduced_[c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter == limit) return true;
      size_t leave = rows_.size();
      Rational best;
      for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][enter] <= 0) continue;
        Rational ratio = rows_[r].back() / rows_[r][enter];
        if (leave == rows_.size() || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      Pivot(leave, enter);
    }
  }

  void DropRow(size_t r) {
    rows_.erase(rows_.begin() + static_cast<long>(r));
    basis_.erase(basis_.begin() + static_cast<long>(r));
  }

  // Removes columns >= keep (the artificials).
  void TruncateColumns(size_t keep) {
    for (auto& row : rows_) {
      Rational rhs = row.back();
      row.resize(keep);
      row.push_back(rhs);
    }
    reduced_.clear();
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
  std::vector<Rational> reduced_;
};

}  // namespace

LpSolution SolveStandardForm(const std::vector<std::vector<Rational>>& a,
                             const std::vector<Rational>& b,
                             const std::vector<Rational>& cost) {
  const size_t m = a.size();
  const size_t k = cost.size();
  if (b.size() != m) throw DimensionError("LP: rhs length mismatch");
  for (const auto& row : a) {
    if (row.size() != k) throw DimensionError("LP: row length mismatch");
  }

  // Phase 1 on [A s | I] with rows signed so that b >= 0.
  std::vector<int> sign(m, 1);
  std::vector<std::vector<Rational>> rows(m);
  std::vector<int> basis(m);
  for (size_t r = 0; r < m; ++r) {
    sign[r] = b[r] < 0 ? -1 : 1;
    rows[r].assign(k + m + 1, Rational(0));
    for (size_t c = 0; c < k; ++c) {
      if (a[r][c] != 0) rows[r][c] = sign[r] * a[r][c];
    }
    rows[r][k + r] = 1;
    rows[r].back() = sign[r] * b[r];
    basis[r] = static_cast<int>(k + r);
  }
  Tableau t(std::move(rows), std::move(basis));
  std::vector<Rational> phase1(k + m, Rational(0));
  for (size_t r = 0; r < m; ++r) phase1[k + r] = 1;
  t.Price(phase1);
  t.Optimize(k + m);

  LpSolution out;
  if (t.objective() > 0) {
    // Phase-1 duals y_i = 1 - d_{k+i}; y^T A <= 0 and y^T b > 0 on the
    // signed system, so -y (re-signed) is a Farkas certificate.
    out.status = LpStatus::kInfeasible;
    out.farkas.resize(m);
    for (size_t r = 0; r < m; ++r) {
      out.farkas[r] = -(1 - t.reduced(k + r)) * sign[r];
    }
    return out;
  }

  // Drive artificials out of the basis; rows where that is impossible are
  // redundant.
  for (size_t r = t.num_rows(); r-- > 0;) {
    if (static_cast<size_t>(t.basis()[r]) < k) continue;
    size_t col = k;
    for (size_t c = 0; c < k; ++c) {
      if (t.at(r, c) != 0) {
        col = c;
        break;
      }
    }
    if (col == k) {
      t.DropRow(r);
    } else {
      t.Pivot(r, col);
    }
  }
  t.TruncateColumns(k);
  t.Price(cost);
  if (!t.Optimize(k)) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.objective = t.objective();
  out.x.assign(k, Rational(0));
  for (size_t r = 0; r < t.num_rows(); ++r) out.x[t.basis()[r]] = t.rhs(r);
  return out;
}

int LinearProgram::AddVariable(const Rational& cost) {
  cost_.push_back(cost);
  return static_cast<int>(cost_.size()) - 1;
}

void LinearProgram::AddConstraint(Row row, Sense sense, const Rational& rhs) {
  for (const auto& [v, coeff] : row) {
    if (v < 0 || v >= num_variables()) {
      throw InvalidArgument("LP: unknown variable");
    }
  }
  constraints_.push_back({std::move(row), sense, rhs});
}

LpSolution LinearProgram::Minimize() const {
  const size_t nv = cost_.size();
  size_t slacks = 0;
  for (const auto& c : constraints_) {
    if (c.sense != Sense::kEqual) ++slacks;
  }
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> cost = cost_;
  cost.resize(nv + slacks, Rational(0));
  size_t s = nv;
  for (const auto& c : constraints_) {
    std::vector<Rational> row(nv + slacks, Rational(0));
    for (const auto& [v, coeff] : c.row) row[v] += coeff;
    if (c.sense == Sense::kLessEqual) row[s++] = 1;
    if (c.sense == Sense::kGreaterEqual) row[s++] = -1;
    a.push_back(std::move(row));
    b.push_back(c.rhs);
  }
  LpSolution sol = SolveStandardForm(a, b, cost);
  if (sol.status == LpStatus::kOptimal) sol.x.resize(nv);
  return sol;
}

}  // namespace entropic
