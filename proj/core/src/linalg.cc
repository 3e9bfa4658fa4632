// Copyright 2026 The sdpsieve Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sdpsieve/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sdpsieve/errors.h"

namespace sdpsieve {

DenseSym::DenseSym(int order)
    : order_(order), data_(static_cast<std::size_t>(order) * order, 0.0) {}

DenseSym DenseSym::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  DenseSym m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw InputError("DenseSym::from_rows: matrix is not square");
    }
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw InputError("DenseSym::from_rows: matrix is not symmetric");
      }
      m.data_[i * n + j] = rows[i][j];
    }
  }
  return m;
}

DenseMatrix DenseMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  DenseMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw InputError("DenseMatrix::from_rows: ragged rows");
    }
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

DenseMatrix DenseMatrix::identity(int order) {
  DenseMatrix m(order, order);
  for (int i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

namespace {

// In-place Cholesky on the lower triangle of `l` (order n, row-major).
// Returns the index of the first failing pivot or -1.
int factor_in_place(std::vector<double>& l, int n, double pivot_tol) {
  for (int j = 0; j < n; ++j) {
    double pivot = l[j * n + j];
    for (int k = 0; k < j; ++k) pivot -= l[j * n + k] * l[j * n + k];
    if (!(pivot > pivot_tol)) return j;
    const double d = std::sqrt(pivot);
    l[j * n + j] = d;
    for (int i = j + 1; i < n; ++i) {
      double s = l[i * n + j];
      for (int k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
      l[i * n + j] = s / d;
    }
  }
  return -1;
}

}  // namespace

PdResult pd_check(const DenseSym& m, double pivot_tol) {
  const int n = m.order();
  std::vector<double> l(m.data().begin(), m.data().end());
  const int failed = factor_in_place(l, n, pivot_tol);
  return {failed < 0, failed};
}

std::optional<DenseMatrix> cholesky_factor(const DenseSym& m,
                                           double pivot_tol) {
  const int n = m.order();
  std::vector<double> l(m.data().begin(), m.data().end());
  if (factor_in_place(l, n, pivot_tol) >= 0) return std::nullopt;
  DenseMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) out(i, j) = l[i * n + j];
  }
  return out;
}

std::vector<double> symmetric_eigenvalues(const DenseSym& m) {
  const int n = m.order();
  std::vector<double> a(m.data().begin(), m.data().end());
  auto at = [&](int i, int j) -> double& { return a[i * n + j]; };

  double total = 0.0;
  for (double v : a) total += v * v;
  constexpr int kMaxSweeps = 100;
  const double eps = std::numeric_limits<double>::epsilon();

  bool converged = n <= 1;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    }
    if (off == 0.0 || std::sqrt(2.0 * off) <= eps * eps * std::sqrt(total)) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        // Skip rotations that cannot change the diagonal in floating point.
        if (sweep > 3 && std::abs(apq) * 100.0 + std::abs(app) == std::abs(app) &&
            std::abs(apq) * 100.0 + std::abs(aqq) == std::abs(aqq)) {
          at(p, q) = at(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          const double np = arp - s * (arq + tau * arp);
          const double nq = arq + s * (arp - tau * arq);
          at(r, p) = at(p, r) = np;
          at(r, q) = at(q, r) = nq;
        }
      }
    }
  }
  if (!converged) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    }
    if (std::sqrt(2.0 * off) > 1e-14 * (1.0 + std::sqrt(total))) {
      throw NumericalError("Jacobi eigenvalue iteration did not converge");
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double min_eigenvalue(const DenseSym& m) {
  if (m.order() < 1) throw InputError("min_eigenvalue: empty matrix");
  return symmetric_eigenvalues(m).front();
}

MatrixNorms norms(const DenseSym& m) {
  MatrixNorms out;
  double sq = 0.0;
  for (double v : m.data()) {
    sq += v * v;
    out.entrywise_inf = std::max(out.entrywise_inf, std::abs(v));
  }
  out.frobenius = std::sqrt(sq);
  return out;
}

std::vector<DenseSym> to_dense(const SymBlockMatrix& m,
                               const BlockStructure& structure) {
  std::vector<DenseSym> blocks;
  blocks.reserve(structure.num_blocks());
  for (int b = 0; b < structure.num_blocks(); ++b) {
    blocks.emplace_back(structure.block_order(b));
  }
  for (const MatrixEntry& e : m.entries()) {
    if (e.block < 0 || e.block >= structure.num_blocks() ||
        std::max(e.i, e.j) >= structure.block_order(e.block)) {
      throw InputError("to_dense: entry does not conform to block structure");
    }
    blocks[e.block].set(e.i, e.j, e.value);
  }
  return blocks;
}

SymBlockMatrix from_dense(std::span<const DenseSym> blocks) {
  std::vector<MatrixEntry> entries;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    const DenseSym& d = blocks[b];
    for (int i = 0; i < d.order(); ++i) {
      for (int j = i; j < d.order(); ++j) {
        if (d(i, j) != 0.0) entries.push_back({b, i, j, d(i, j)});
      }
    }
  }
  return SymBlockMatrix(std::move(entries));
}

}  // namespace sdpsieve
