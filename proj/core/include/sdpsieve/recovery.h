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

// Mapping solutions of a sieved problem back to the original problem.

#ifndef SDPSIEVE_RECOVERY_H_
#define SDPSIEVE_RECOVERY_H_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sdpsieve/model.h"

namespace sdpsieve {

struct RecoveryOptions {
  double shift = 1e-6;
};

// Copies a reduced primal matrix into the original coordinates; deleted
// rows and columns are zero. Throws InputError on a structure mismatch.
SymBlockMatrix pad_primal(const SymBlockMatrix& x_reduced,
                          const Certificate& certificate);

// Inverse of pad_primal on the surviving coordinates.
SymBlockMatrix restrict_primal(const SymBlockMatrix& x_full,
                               const Certificate& certificate);

// True iff C - sum_i y_i A_i + shift*I is positive definite on every PSD
// block (Cholesky, tolerance 0), every nonnegative slack exceeds -shift and
// the free-variable equations hold within 1e-9.
bool dual_slack_pd(const SdpProblem& problem, std::span<const double> y,
                   double shift);

struct RecoveryResult {
  bool recovered = false;
  std::vector<double> y;            // original constraint order
  std::optional<int> failed_step;   // certificate step that could not be fixed
};

// Extends a dual solution of the reduced problem one deleted constraint at a
// time, last deletion first. Each multiplier is found by the integer
// linesearch 0, -1, -2, then -100, then -3, -4, ... (largest feasible value
// wins); it is applied along the step's sign so that the search direction
// adds a positive multiple of the certified definite block to the slack.
RecoveryResult basic_recovery(const SdpProblem& problem,
                              const Certificate& certificate,
                              std::span<const double> y_reduced,
                              const RecoveryOptions& options = {});

struct IdealRecoveryRequest {
  const SdpProblem* problem = nullptr;
  const Certificate* certificate = nullptr;
  // Original indices of the multipliers to be found.
  std::vector<int> unknown_constraints;
  // Full-length multiplier vector with surviving components fixed and the
  // unknown ones zero.
  std::vector<double> fixed_y;
};

// External joint feasibility solver: returns values for
// request.unknown_constraints (same order) or nullopt on failure.
using FeasibilitySolver = std::function<std::optional<std::vector<double>>(
    const IdealRecoveryRequest&)>;

// Delegates the joint search for all deleted multipliers to `solver` and
// verifies the assembled point with dual_slack_pd. Throws UnsupportedError
// when no solver is supplied.
RecoveryResult ideal_recovery_hook(const SdpProblem& problem,
                                   const Certificate& certificate,
                                   std::span<const double> y_reduced,
                                   const FeasibilitySolver& solver,
                                   const RecoveryOptions& options = {});

}  // namespace sdpsieve

#endif  // SDPSIEVE_RECOVERY_H_
