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

// Coordinate-face sieving of primal SDPs.
//
// A constraint is reducing when, restricted to its live support and after
// an optional sign flip, its matrix is positive definite and its right-hand
// side is nonpositive. A zero right-hand side forces X to vanish on the
// support, so the constraint and the support rows/columns are deleted from
// every other constraint; a negative one proves infeasibility. Deletions
// are only marked during the run and physically applied by materialize().

#ifndef SDPSIEVE_SIEVE_H_
#define SDPSIEVE_SIEVE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdpsieve/model.h"

namespace sdpsieve {

struct SieveOptions {
  bool safe_mode = true;
  double eps = 0x1p-52;
  std::optional<int> max_iterations;
};

enum class ConstraintClass {
  kNotReducing,
  kDeleteZero,
  kReduce,
  kInfeasible,
  kAmbiguous,
};

const char* constraint_class_name(ConstraintClass c);

struct Classification {
  ConstraintClass kind = ConstraintClass::kNotReducing;
  int sign = 1;
  std::vector<Coordinate> support;
};

struct SieveOutcome;

// Work counters; kernel_flops approximates Cholesky arithmetic.
struct SieveStats {
  int passes = 0;
  std::int64_t classifications = 0;
  std::int64_t entry_visits = 0;
  std::int64_t kernel_flops = 0;
};

// Lazy-deletion bookkeeping: which constraints are undeleted, which
// coordinates are active, and for every constraint the number of live
// stored entries touching each row (the row-usage table).
class SieveState {
 public:
  SieveState(const SdpProblem& problem, const SieveOptions& options);

  int num_constraints() const {
    return static_cast<int>(undeleted_.size());
  }
  int dimension() const { return index_.dimension(); }
  const CoordinateIndex& index() const { return index_; }

  bool undeleted(int constraint) const { return undeleted_[constraint]; }
  const std::vector<bool>& undeleted_constraints() const { return undeleted_; }
  bool active(Coordinate c) const { return active_[index_.flat(c)]; }
  const std::vector<bool>& active_mask() const { return active_; }

  // Row-usage table: true iff flat row `row` carries a live stored entry of
  // `constraint`.
  bool row_live(int row, int constraint) const;
  // Aggregate column: true iff the row has not been deleted everywhere.
  bool row_live_anywhere(int row) const { return active_[row]; }

  // max(|b|_inf, 1) of the original right-hand side, frozen at construction.
  double rhs_scale() const { return rhs_scale_; }
  const SieveOptions& options() const { return options_; }
  const std::vector<ReductionStep>& steps() const { return steps_; }
  const SieveStats& stats() const { return stats_; }

 private:
  struct FlatEntry {
    int row;
    int col;
    double value;
    int row_slot;
    int col_slot;
  };
  struct CompiledConstraint {
    std::vector<FlatEntry> entries;
    std::vector<int> rows;        // distinct flat rows, ascending
    std::vector<int> live_count;  // live entries touching rows[k]
  };
  struct Touch {
    int constraint;
    int entry;
  };

  void delete_coordinate(int row);

  friend std::vector<Coordinate> constraint_support(const SieveState&,
                                                    const SdpProblem&, int);
  friend Classification classify_constraint(const SieveState&,
                                            const SdpProblem&, int,
                                            const SieveOptions&);
  friend void apply_reduction(SieveState&, const ReductionStep&);
  friend SieveOutcome sieve(const SdpProblem&, const SieveOptions&);

  SieveOptions options_;
  CoordinateIndex index_;
  std::vector<CompiledConstraint> compiled_;
  std::vector<std::vector<Touch>> touching_;
  std::vector<bool> undeleted_;
  std::vector<bool> active_;
  double rhs_scale_ = 1.0;
  std::vector<ReductionStep> steps_;
  mutable SieveStats stats_;
};

// Active coordinates where constraint i has a live stored entry, in
// ascending (block, row) order.
std::vector<Coordinate> constraint_support(const SieveState& state,
                                           const SdpProblem& problem, int i);

Classification classify_constraint(const SieveState& state,
                                   const SdpProblem& problem, int i,
                                   const SieveOptions& options);

// Marks the step's constraint deleted, masks its support (ReducePsd) and
// records the step.
void apply_reduction(SieveState& state, const ReductionStep& step);

// Compacts the problem to the surviving coordinates and constraints.
std::pair<SdpProblem, IndexMaps> materialize(const SdpProblem& problem,
                                             const SieveState& state);

// Certificate describing the state's deletions so far.
Certificate make_certificate(const SdpProblem& problem,
                             const SieveState& state);

enum class SieveVerdict { kReduced, kInfeasible };

struct SieveOutcome {
  SieveVerdict verdict = SieveVerdict::kReduced;
  std::optional<SdpProblem> reduced;  // set iff verdict == kReduced
  Certificate certificate;
  int iteration_count = 0;
  SieveStats stats;
};

// Thrown when options.max_iterations would be exceeded.
class IterationLimitError : public std::runtime_error {
 public:
  IterationLimitError(Certificate partial, SieveStats stats)
      : std::runtime_error("sieve: iteration limit reached"),
        partial_(std::move(partial)),
        stats_(stats) {}
  const Certificate& partial() const { return partial_; }
  const SieveStats& stats() const { return stats_; }

 private:
  Certificate partial_;
  SieveStats stats_;
};

// Repeats the basic step: scans undeleted constraints in increasing index
// order, applies the first DeleteZero/Reduce found and restarts the scan;
// stops at an infeasibility proof or when a full scan finds nothing.
// Throws InputError if validate(problem) is not empty.
SieveOutcome sieve(const SdpProblem& problem, const SieveOptions& options = {});

// Replays a certificate on the original problem, re-deriving every step.
// Returns the discrepancies found; empty means the certificate is valid and
// its deletion sets and index maps match the replay.
std::vector<std::string> verify_certificate(const SdpProblem& problem,
                                            const Certificate& certificate,
                                            const SieveOptions& options = {});

}  // namespace sdpsieve

#endif  // SDPSIEVE_SIEVE_H_
