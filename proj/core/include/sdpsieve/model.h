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

// Core data types for block-structured semidefinite programs in primal
// standard form
//
//   inf  C . X + c_f' x_f
//   s.t. A_i . X + f_i' x_f = b_i   (i = 0, ..., m-1)
//        X block-diagonal, every block positive semidefinite,
//
// where the nonnegative scalars are order-1 blocks placed after the PSD
// blocks and x_f are unconstrained (free) scalars.

#ifndef SDPSIEVE_MODEL_H_
#define SDPSIEVE_MODEL_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sdpsieve {

struct BlockStructure {
  std::vector<int> psd_blocks;
  int nonneg_count = 0;
  int free_count = 0;

  // PSD blocks followed by one order-1 block per nonnegative scalar.
  int num_blocks() const {
    return static_cast<int>(psd_blocks.size()) + nonneg_count;
  }
  int block_order(int block) const;
  bool is_nonneg_block(int block) const {
    return block >= static_cast<int>(psd_blocks.size());
  }
  // n = sum of PSD orders + nonneg_count.
  int dimension() const;

  friend bool operator==(const BlockStructure&,
                         const BlockStructure&) = default;
};

struct Coordinate {
  int block = 0;
  int row = 0;

  friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

// Maps block coordinates to a flat 0..n-1 index and back.
class CoordinateIndex {
 public:
  explicit CoordinateIndex(const BlockStructure& structure);

  int dimension() const { return static_cast<int>(block_of_.size()); }
  int flat(Coordinate c) const { return offsets_[c.block] + c.row; }
  int flat(int block, int row) const { return offsets_[block] + row; }
  Coordinate coordinate(int flat) const {
    return {block_of_[flat], flat - offsets_[block_of_[flat]]};
  }
  int offset(int block) const { return offsets_[block]; }

 private:
  std::vector<int> offsets_;
  std::vector<int> block_of_;
};

struct MatrixEntry {
  int block = 0;
  int i = 0;
  int j = 0;
  double value = 0.0;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

// Sparse symmetric block matrix storing the upper triangle (i <= j) only.
// Entries are kept sorted by (block, i, j). The constructor does not
// enforce the invariants so that validate() can report breaches; use
// normalized() or the helpers below to build well-formed matrices.
class SymBlockMatrix {
 public:
  SymBlockMatrix() = default;
  explicit SymBlockMatrix(std::vector<MatrixEntry> entries);

  const std::vector<MatrixEntry>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Symmetric lookup; (i, j) and (j, i) address the same entry.
  double at(int block, int i, int j) const;

  // Swaps lower-triangle keys into the upper triangle, sums duplicates and
  // drops zeros.
  SymBlockMatrix normalized() const;

  friend bool operator==(const SymBlockMatrix&,
                         const SymBlockMatrix&) = default;

 private:
  std::vector<MatrixEntry> entries_;
};

// Trace inner product M . X of two symmetric block matrices.
double inner_product(const SymBlockMatrix& a, const SymBlockMatrix& b);

struct Constraint {
  SymBlockMatrix matrix;
  std::vector<double> free_coeffs;  // length free_count

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct SdpProblem {
  BlockStructure structure;
  SymBlockMatrix objective;
  std::vector<double> free_objective;  // length free_count
  std::vector<Constraint> constraints;
  std::vector<double> rhs;  // b, length m

  int num_constraints() const { return static_cast<int>(constraints.size()); }

  friend bool operator==(const SdpProblem&, const SdpProblem&) = default;
};

struct Solution {
  SymBlockMatrix x;
  std::vector<double> x_free;
  std::vector<double> y;
  std::optional<SymBlockMatrix> z;

  friend bool operator==(const Solution&, const Solution&) = default;
};

enum class StepKind { kReducePsd, kDeleteZeroConstraint, kInfeasible };

const char* step_kind_name(StepKind kind);

struct ReductionStep {
  StepKind kind = StepKind::kReducePsd;
  int constraint = 0;  // original 0-based index
  int sign = 1;        // +1 or -1
  std::vector<Coordinate> support;
  double rhs = 0.0;

  friend bool operator==(const ReductionStep&,
                         const ReductionStep&) = default;
};

// Bijections between surviving original coordinates/constraints and the
// compacted problem.
struct IndexMaps {
  BlockStructure reduced_structure;
  // Original coordinate of each reduced coordinate, in reduced flat order.
  std::vector<Coordinate> coordinate_origin;
  // Original index of each reduced constraint.
  std::vector<int> constraint_origin;

  friend bool operator==(const IndexMaps&, const IndexMaps&) = default;
};

struct Certificate {
  std::vector<ReductionStep> steps;
  BlockStructure original_structure;
  int original_num_constraints = 0;
  std::vector<Coordinate> deleted_coordinates;  // sorted
  std::vector<int> deleted_constraints;         // sorted
  IndexMaps index_maps;

  bool proves_infeasibility() const {
    return !steps.empty() && steps.back().kind == StepKind::kInfeasible;
  }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Reports every breached invariant; empty iff the problem is well formed.
std::vector<std::string> validate(const SdpProblem& problem);

// Checks one matrix against a structure; messages are prefixed by `label`.
void validate_matrix(const SymBlockMatrix& m, const BlockStructure& s,
                     const std::string& label,
                     std::vector<std::string>& violations);

// Identity maps for a problem with nothing deleted.
IndexMaps identity_maps(const BlockStructure& structure, int num_constraints);

}  // namespace sdpsieve

#endif  // SDPSIEVE_MODEL_H_
