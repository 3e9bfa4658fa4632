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

// Solution-quality and preprocessing statistics: the six DIMACS errors,
// help codes comparing solves before/after preprocessing, and reduction
// rates.

#ifndef SDPSIEVE_METRICS_H_
#define SDPSIEVE_METRICS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sdpsieve/model.h"

namespace sdpsieve {

struct DimacsErrors {
  double err1 = 0.0;  // primal infeasibility
  double err2 = 0.0;  // primal cone violation (clamped at 0)
  double err3 = 0.0;  // dual slack identity residual
  double err4 = 0.0;  // dual cone violation (clamped at 0)
  double err5 = 0.0;  // relative duality gap, signed
  double err6 = 0.0;  // complementarity Z . X

  double max_abs() const;
};

// With no explicit Z in the solution the slack is Z = C - A*(y), so the
// matrix part of err3 vanishes; a supplied Z is scored by the residual
// |A*(y) + Z - C|_F. Free-variable dual equations contribute to err3 in both
// cases. Throws InputError when the solution does not fit the problem.
DimacsErrors dimacs_errors(const SdpProblem& problem, const Solution& solution);

struct SolveReport {
  bool infeasible = false;
  double primal_obj = 0.0;
  double dual_obj = 0.0;
  double dimacs_max_abs = 0.0;
  bool out_of_memory = false;
};

// The preprocessor itself proved infeasibility; no solve happened after it.
struct SieveInfeasible {};

using AfterReport = std::variant<SolveReport, SieveInfeasible>;

enum class HelpCode { kPlus1, kMinus1, kPlus2, kMinus2, kPlus3, kOutOfMemory };

// Codes in canonical order (1, -1, 2, -2, 3, MM).
std::vector<HelpCode> help_code(const SolveReport& before,
                                const AfterReport& after);

// "1", "2,3", "MM", ... ; empty string for no code.
std::string help_code_string(const std::vector<HelpCode>& codes);

struct ReductionRates {
  int n_before = 0;
  int n_after = 0;
  int m_before = 0;
  int m_after = 0;
  std::size_t nnz_before = 0;
  std::size_t nnz_after = 0;
  // Fractions in [0, 1]; nullopt when the "before" quantity is zero.
  std::optional<double> n_reduction;
  std::optional<double> m_reduction;
  std::optional<double> nnz_reduction;
  // Preprocessing time / solve time without preprocessing * 100.
  std::optional<double> pre_vs_solve_percent;
  // (t_solve_before - (t_pre + t_solve_after)) / t_solve_before * 100.
  std::optional<double> time_reduction_percent;
};

// Throws InputError for negative times.
ReductionRates reduction_stats(const SdpProblem& before,
                               const SdpProblem& after, double t_pre = 0.0,
                               double t_solve_before = 0.0,
                               double t_solve_after = 0.0);

// Total stored entries over all constraint matrices.
std::size_t constraint_nnz(const SdpProblem& problem);

}  // namespace sdpsieve

#endif  // SDPSIEVE_METRICS_H_
