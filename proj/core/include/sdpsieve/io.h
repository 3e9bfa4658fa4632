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

// Text formats: SDPA sparse problems, solution files, certificates and the
// small key=value documents used by the command-line tool.
//
// Problems are read as the data of the primal form: the file's constraint
// matrices F_1..F_m become A_i, its objective vector c becomes b, and F_0
// becomes C. The canonical writer emits PSD blocks first and all
// nonnegative scalars as one trailing diagonal block; solution files use
// the same 1-based block numbering.

#ifndef SDPSIEVE_IO_H_
#define SDPSIEVE_IO_H_

#include <string>
#include <string_view>

#include "sdpsieve/gen.h"
#include "sdpsieve/metrics.h"
#include "sdpsieve/model.h"

namespace sdpsieve {

inline constexpr int kCertificateSchemaVersion = 1;

// Throws ParseError (with line number) on malformed input.
SdpProblem read_sdpa(std::string_view text);

// Canonical form: no comments, entries sorted by (matno, blkno, i, j),
// values with 17 significant digits, newline-terminated. Throws
// UnsupportedError when the problem has free variables.
std::string write_sdpa(const SdpProblem& problem);

// Solution file:
//   y <y_1> ... <y_m>
//   [xfree <x_1> ... <x_f>]
//   <blkno> <i> <j> <value>        X entries, i <= j, 1-based
//   [Z
//   <blkno> <i> <j> <value> ...]   explicit dual slack
// Throws ParseError on syntax errors and InputError on a length mismatch
// with `problem`.
Solution read_solution(std::string_view text, const SdpProblem& problem);
std::string write_solution(const Solution& solution,
                           const BlockStructure& structure);

// Versioned key-value certificate document.
std::string write_certificate(const Certificate& certificate);
Certificate read_certificate(std::string_view text);

std::string write_plant_record(const PlantRecord& record);

// key=value lines: infeasible, primal_obj, dual_obj, dimacs, out_of_memory,
// and sieve_infeasible (only meaningful for the "after" report).
AfterReport read_solve_report(std::string_view text);
std::string write_solve_report(const SolveReport& report);

// 17 significant digits ("%.17g"); round-trips every double.
std::string format_double(double value);

}  // namespace sdpsieve

#endif  // SDPSIEVE_IO_H_
