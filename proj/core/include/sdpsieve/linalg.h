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

// Dense symmetric kernels used on small extracted submatrices: Cholesky
// positive-definiteness testing, smallest eigenvalue, norms.

#ifndef SDPSIEVE_LINALG_H_
#define SDPSIEVE_LINALG_H_

#include <optional>
#include <span>
#include <vector>

#include "sdpsieve/model.h"

namespace sdpsieve {

// Full row-major storage of a symmetric matrix; writes go through set() so
// that (i, j) and (j, i) always agree exactly.
class DenseSym {
 public:
  DenseSym() = default;
  explicit DenseSym(int order);
  // Throws InputError unless `rows` is square and exactly symmetric.
  static DenseSym from_rows(const std::vector<std::vector<double>>& rows);

  int order() const { return order_; }
  double operator()(int i, int j) const { return data_[i * order_ + j]; }
  void set(int i, int j, double value) {
    data_[i * order_ + j] = value;
    data_[j * order_ + i] = value;
  }
  void add(int i, int j, double value) {
    data_[i * order_ + j] += value;
    if (i != j) data_[j * order_ + i] += value;
  }
  std::span<const double> data() const { return data_; }

  friend bool operator==(const DenseSym&, const DenseSym&) = default;

 private:
  int order_ = 0;
  std::vector<double> data_;
};

// General row-major dense matrix (similarity transforms, factors).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static DenseMatrix identity(int order);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return data_[i * cols_ + j]; }
  double operator()(int i, int j) const { return data_[i * cols_ + j]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

struct PdResult {
  bool positive_definite = false;
  int failed_pivot = -1;  // first pivot <= tolerance, -1 when PD

  explicit operator bool() const { return positive_definite; }
};

// Runs an unpivoted Cholesky factorization and reports whether every pivot
// exceeds `pivot_tol`. With the default 0 a pivot must be strictly positive.
PdResult pd_check(const DenseSym& m, double pivot_tol = 0.0);

// Lower-triangular Cholesky factor L with L L' = m, or nullopt if m fails
// pd_check with the same tolerance.
std::optional<DenseMatrix> cholesky_factor(const DenseSym& m,
                                           double pivot_tol = 0.0);

// All eigenvalues in ascending order, by cyclic Jacobi rotations. Throws
// NumericalError if the sweep budget is exhausted.
std::vector<double> symmetric_eigenvalues(const DenseSym& m);

double min_eigenvalue(const DenseSym& m);

struct MatrixNorms {
  double frobenius = 0.0;
  double entrywise_inf = 0.0;
};

MatrixNorms norms(const DenseSym& m);

// Per-block dense copies of a block matrix (nonneg scalars give order-1
// blocks).
std::vector<DenseSym> to_dense(const SymBlockMatrix& m,
                               const BlockStructure& structure);

// Inverse of to_dense; exact zeros are not stored.
SymBlockMatrix from_dense(std::span<const DenseSym> blocks);

}  // namespace sdpsieve

#endif  // SDPSIEVE_LINALG_H_
