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

// Worked instances and seeded instance families for tests and the CLI.

#ifndef SDPSIEVE_GEN_H_
#define SDPSIEVE_GEN_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "sdpsieve/linalg.h"
#include "sdpsieve/model.h"

namespace sdpsieve {

// 3x3, m = 2:  diag(1,0,0) . X = 0,  [[0,0,1],[0,1,0],[1,0,0]] . X = -1.
// Infeasible; objective is the zero matrix.
SdpProblem gen_example1();

// 3x3, m = 2 instance with a unit duality gap: C = diag(1,1,0),
// diag(1,0,0) . X = 0,  [[0,0,1],[0,1,0],[1,0,0]] . X = 1.
SdpProblem gen_posgap();

// Near-feasible point of gen_posgap() violating only the first constraint
// (by eps) with objective 2*eps; the (3,3) entry is the smallest value
// keeping it PSD, (1-eps)^2 / (4 eps). Requires 0 < eps < 1.
SymBlockMatrix gen_posgap_eps(double eps);

// Replaces C and every A_i by T' M T. T must be square of order n and
// block diagonal with respect to the problem's blocks. Exact zeros produced
// by the product are dropped.
SdpProblem similarity_transform(const SdpProblem& problem, const DenseMatrix& t);

struct MessyInstance {
  SdpProblem problem;
  // Integer unimodular m x m matrix U: A'_i = sum_j U_ij A_j, b' = U b.
  std::vector<std::vector<std::int64_t>> row_ops;
  DenseMatrix transform;
};

// Obscures a problem with random elementary row operations followed by a
// random well-conditioned similarity transformation; deterministic per
// seed.
MessyInstance gen_messy(const SdpProblem& problem, std::uint64_t seed);

// Random invertible, block-diagonal, diagonally dominant transform for a
// structure; used by gen_messy and by tests.
DenseMatrix random_transform(const BlockStructure& structure,
                             std::uint64_t seed);

struct PlantRecord {
  std::vector<int> constraints;                  // planted constraint indices
  std::vector<std::vector<Coordinate>> supports;  // sorted, pairwise disjoint
  std::vector<int> signs;
  // Planted constraint j (in plant order) becomes reducing only after plant
  // j-1 has been removed.
  bool chained = false;
  // The last plant has a negative right-hand side (after sign).
  bool infeasible = false;
};

struct PlantedOptions {
  std::uint64_t seed = 0;
  // PSD block orders; n = their sum.
  std::vector<int> blocks = {10};
  int m = 10;
  int k = 2;
  // Support sizes are drawn from [1, max_support].
  int max_support = 3;
  // Explicit support sizes (size k) overriding max_support.
  std::vector<int> support_sizes;
  bool chained = false;
  bool infeasible = false;
  // Stored entries per filler constraint, besides its indefinite pair.
  int filler_density = 6;
};

struct PlantedInstance {
  SdpProblem problem;
  PlantRecord record;
  // PSD point with A(X) = b that vanishes on every planted support; empty
  // when record.infeasible.
  SymBlockMatrix feasible_x;
};

// Random problem with k constraints of reducing form on disjoint supports
// (diagonally dominant definite blocks, b = 0) mixed with m - k fillers
// that stay indefinite under every reachable deletion. Throws InputError
// when the parameters cannot be satisfied.
PlantedInstance gen_planted(const PlantedOptions& options);

// Convenience overload: one PSD block of order n.
PlantedInstance gen_planted(std::uint64_t seed, int n, int m, int k);

}  // namespace sdpsieve

#endif  // SDPSIEVE_GEN_H_
