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

#include "sdpsieve/sieve.h"

#include <algorithm>
#include <cmath>

#include "sdpsieve/errors.h"
#include "sdpsieve/linalg.h"

namespace sdpsieve {

const char* constraint_class_name(ConstraintClass c) {
  switch (c) {
    case ConstraintClass::kNotReducing:
      return "not_reducing";
    case ConstraintClass::kDeleteZero:
      return "delete_zero";
    case ConstraintClass::kReduce:
      return "reduce";
    case ConstraintClass::kInfeasible:
      return "infeasible";
    case ConstraintClass::kAmbiguous:
      return "ambiguous";
  }
  return "unknown";
}

SieveState::SieveState(const SdpProblem& problem, const SieveOptions& options)
    : options_(options), index_(problem.structure) {
  if (!(options.eps > 0.0)) throw InputError("sieve: eps must be positive");
  const int m = problem.num_constraints();
  const int n = index_.dimension();
  compiled_.resize(m);
  touching_.resize(n);
  undeleted_.assign(m, true);
  active_.assign(n, true);

  for (int j = 0; j < m; ++j) {
    CompiledConstraint& cc = compiled_[j];
    for (const MatrixEntry& e : problem.constraints[j].matrix.entries()) {
      const int r = index_.flat(e.block, e.i);
      const int c = index_.flat(e.block, e.j);
      cc.rows.push_back(r);
      cc.rows.push_back(c);
      cc.entries.push_back({r, c, e.value, 0, 0});
    }
    std::sort(cc.rows.begin(), cc.rows.end());
    cc.rows.erase(std::unique(cc.rows.begin(), cc.rows.end()), cc.rows.end());
    cc.live_count.assign(cc.rows.size(), 0);
    auto slot = [&cc](int row) {
      return static_cast<int>(
          std::lower_bound(cc.rows.begin(), cc.rows.end(), row) -
          cc.rows.begin());
    };
    for (int k = 0; k < static_cast<int>(cc.entries.size()); ++k) {
      FlatEntry& fe = cc.entries[k];
      fe.row_slot = slot(fe.row);
      fe.col_slot = slot(fe.col);
      ++cc.live_count[fe.row_slot];
      touching_[fe.row].push_back({j, k});
      if (fe.col != fe.row) {
        ++cc.live_count[fe.col_slot];
        touching_[fe.col].push_back({j, k});
      }
    }
  }

  double bmax = 0.0;
  for (double b : problem.rhs) bmax = std::max(bmax, std::abs(b));
  rhs_scale_ = std::max(bmax, 1.0);
}

bool SieveState::row_live(int row, int constraint) const {
  const CompiledConstraint& cc = compiled_[constraint];
  auto it = std::lower_bound(cc.rows.begin(), cc.rows.end(), row);
  if (it == cc.rows.end() || *it != row) return false;
  return cc.live_count[it - cc.rows.begin()] > 0;
}

void SieveState::delete_coordinate(int row) {
  if (!active_[row]) return;
  for (const Touch& t : touching_[row]) {
    CompiledConstraint& cc = compiled_[t.constraint];
    const FlatEntry& fe = cc.entries[t.entry];
    if (!active_[fe.row] || !active_[fe.col]) continue;
    --cc.live_count[fe.row_slot];
    if (fe.col != fe.row) --cc.live_count[fe.col_slot];
  }
  active_[row] = false;
}

std::vector<Coordinate> constraint_support(const SieveState& state,
                                           const SdpProblem& problem, int i) {
  (void)problem;
  const auto& cc = state.compiled_[i];
  std::vector<Coordinate> support;
  for (std::size_t k = 0; k < cc.rows.size(); ++k) {
    if (cc.live_count[k] > 0) support.push_back(state.index_.coordinate(cc.rows[k]));
  }
  return support;
}

Classification classify_constraint(const SieveState& state,
                                   const SdpProblem& problem, int i,
                                   const SieveOptions& options) {
  ++state.stats_.classifications;
  Classification out;
  for (double f : problem.constraints[i].free_coeffs) {
    if (f != 0.0) return out;
  }

  const double scale = state.rhs_scale_;
  const double zero_tol = options.safe_mode ? options.eps * scale : 0.0;
  const double infeas_tol =
      options.safe_mode ? std::sqrt(options.eps) * scale : 0.0;
  const double b = problem.rhs[i];

  const auto& cc = state.compiled_[i];
  std::vector<int> rows;
  for (std::size_t k = 0; k < cc.rows.size(); ++k) {
    if (cc.live_count[k] > 0) rows.push_back(cc.rows[k]);
  }
  state.stats_.entry_visits += static_cast<std::int64_t>(cc.rows.size());

  if (rows.empty()) {
    if (std::abs(b) <= zero_tol) {
      out.kind = ConstraintClass::kDeleteZero;
    } else {
      out.kind = ConstraintClass::kInfeasible;
      out.sign = b > 0 ? -1 : 1;
    }
    return out;
  }

  const int order = static_cast<int>(rows.size());
  DenseSym d(order);
  for (const auto& fe : cc.entries) {
    if (!state.active_[fe.row] || !state.active_[fe.col]) continue;
    const int p = static_cast<int>(
        std::lower_bound(rows.begin(), rows.end(), fe.row) - rows.begin());
    const int q = static_cast<int>(
        std::lower_bound(rows.begin(), rows.end(), fe.col) - rows.begin());
    d.set(p, q, fe.value);
  }
  state.stats_.entry_visits += static_cast<std::int64_t>(cc.entries.size());

  // A positive definite matrix has a positive diagonal, which fixes the sign
  // and rejects most candidates before any factorization.
  const int sign = d(0, 0) > 0 ? 1 : (d(0, 0) < 0 ? -1 : 0);
  if (sign == 0) return out;
  double max_diag = 0.0;
  for (int k = 0; k < order; ++k) {
    const double v = sign * d(k, k);
    if (!(v > 0)) return out;
    max_diag = std::max(max_diag, v);
  }
  if (sign < 0) {
    for (int p = 0; p < order; ++p) {
      for (int q = p; q < order; ++q) d.set(p, q, -d(p, q));
    }
  }
  const double pivot_tol =
      options.safe_mode ? order * options.eps * max_diag : 0.0;
  state.stats_.kernel_flops +=
      static_cast<std::int64_t>(order) * order * order / 3 + order;
  if (!pd_check(d, pivot_tol)) return out;

  const double sb = sign * b;
  if (sb > zero_tol) return out;
  out.sign = sign;
  out.support.reserve(order);
  for (int r : rows) out.support.push_back(state.index_.coordinate(r));
  if (sb > -zero_tol || (!options.safe_mode && sb >= -infeas_tol)) {
    out.kind = ConstraintClass::kReduce;
  } else if (sb < -infeas_tol) {
    out.kind = ConstraintClass::kInfeasible;
  } else {
    out.kind = ConstraintClass::kAmbiguous;
  }
  return out;
}

void apply_reduction(SieveState& state, const ReductionStep& step) {
  if (step.kind != StepKind::kInfeasible) {
    state.undeleted_[step.constraint] = false;
  }
  if (step.kind == StepKind::kReducePsd) {
    for (const Coordinate& c : step.support) {
      state.delete_coordinate(state.index_.flat(c));
    }
  }
  state.steps_.push_back(step);
}

namespace {

// Reduced coordinate of every original flat index (-1 when deleted), plus
// the reduced structure and origin maps.
struct Compaction {
  IndexMaps maps;
  std::vector<Coordinate> target;
  std::vector<bool> alive;
  std::vector<int> constraint_target;
};

Compaction compact(const SdpProblem& problem, const SieveState& state) {
  const BlockStructure& s = problem.structure;
  const CoordinateIndex& index = state.index();
  Compaction out;
  out.alive.assign(index.dimension(), false);
  out.target.assign(index.dimension(), Coordinate{-1, -1});

  BlockStructure& rs = out.maps.reduced_structure;
  rs.free_count = s.free_count;
  const int psd = static_cast<int>(s.psd_blocks.size());
  for (int b = 0; b < psd; ++b) {
    int kept = 0;
    for (int r = 0; r < s.psd_blocks[b]; ++r) {
      if (state.active_mask()[index.flat(b, r)]) ++kept;
    }
    if (kept == 0) continue;
    const int nb = static_cast<int>(rs.psd_blocks.size());
    rs.psd_blocks.push_back(kept);
    int row = 0;
    for (int r = 0; r < s.psd_blocks[b]; ++r) {
      const int f = index.flat(b, r);
      if (!state.active_mask()[f]) continue;
      out.alive[f] = true;
      out.target[f] = {nb, row++};
      out.maps.coordinate_origin.push_back({b, r});
    }
  }
  const int reduced_psd = static_cast<int>(rs.psd_blocks.size());
  for (int t = 0; t < s.nonneg_count; ++t) {
    const int f = index.flat(psd + t, 0);
    if (!state.active_mask()[f]) continue;
    out.alive[f] = true;
    out.target[f] = {reduced_psd + rs.nonneg_count, 0};
    ++rs.nonneg_count;
    out.maps.coordinate_origin.push_back({psd + t, 0});
  }

  out.constraint_target.assign(problem.num_constraints(), -1);
  for (int i = 0; i < problem.num_constraints(); ++i) {
    if (!state.undeleted(i)) continue;
    out.constraint_target[i] =
        static_cast<int>(out.maps.constraint_origin.size());
    out.maps.constraint_origin.push_back(i);
  }
  return out;
}

SymBlockMatrix restrict_matrix(const SymBlockMatrix& m,
                               const CoordinateIndex& index,
                               const Compaction& comp) {
  std::vector<MatrixEntry> out;
  out.reserve(m.nnz());
  for (const MatrixEntry& e : m.entries()) {
    const int r = index.flat(e.block, e.i);
    const int c = index.flat(e.block, e.j);
    if (!comp.alive[r] || !comp.alive[c]) continue;
    const Coordinate tr = comp.target[r];
    const Coordinate tc = comp.target[c];
    out.push_back({tr.block, tr.row, tc.row, e.value});
  }
  return SymBlockMatrix(std::move(out));
}

}  // namespace

std::pair<SdpProblem, IndexMaps> materialize(const SdpProblem& problem,
                                             const SieveState& state) {
  Compaction comp = compact(problem, state);
  const CoordinateIndex& index = state.index();
  SdpProblem out;
  out.structure = comp.maps.reduced_structure;
  out.objective = restrict_matrix(problem.objective, index, comp);
  out.free_objective = problem.free_objective;
  for (int i : comp.maps.constraint_origin) {
    out.constraints.push_back(
        {restrict_matrix(problem.constraints[i].matrix, index, comp),
         problem.constraints[i].free_coeffs});
    out.rhs.push_back(problem.rhs[i]);
  }
  return {std::move(out), std::move(comp.maps)};
}

Certificate make_certificate(const SdpProblem& problem,
                             const SieveState& state) {
  Certificate cert;
  cert.steps = state.steps();
  cert.original_structure = problem.structure;
  cert.original_num_constraints = problem.num_constraints();
  for (int f = 0; f < state.dimension(); ++f) {
    if (!state.active_mask()[f]) {
      cert.deleted_coordinates.push_back(state.index().coordinate(f));
    }
  }
  for (int i = 0; i < problem.num_constraints(); ++i) {
    if (!state.undeleted(i)) cert.deleted_constraints.push_back(i);
  }
  cert.index_maps = compact(problem, state).maps;
  return cert;
}

namespace {

ReductionStep to_step(const Classification& c, int constraint, double rhs) {
  ReductionStep step;
  step.constraint = constraint;
  step.sign = c.sign;
  step.rhs = rhs;
  switch (c.kind) {
    case ConstraintClass::kDeleteZero:
      step.kind = StepKind::kDeleteZeroConstraint;
      break;
    case ConstraintClass::kInfeasible:
      step.kind = StepKind::kInfeasible;
      step.support = c.support;
      break;
    default:
      step.kind = StepKind::kReducePsd;
      step.support = c.support;
      break;
  }
  return step;
}

bool acts_on(ConstraintClass kind, const SieveOptions& options) {
  return kind == ConstraintClass::kReduce ||
         kind == ConstraintClass::kDeleteZero ||
         kind == ConstraintClass::kInfeasible ||
         (kind == ConstraintClass::kAmbiguous && !options.safe_mode);
}

}  // namespace

SieveOutcome sieve(const SdpProblem& problem, const SieveOptions& options) {
  const auto violations = validate(problem);
  if (!violations.empty()) {
    throw InputError("sieve: invalid problem: " + violations.front());
  }
  SieveState state(problem, options);
  SieveStats& stats = state.stats_;
  const int m = problem.num_constraints();

  SieveOutcome outcome;
  bool progress = true;
  while (progress) {
    progress = false;
    ++stats.passes;
    for (int i = 0; i < m; ++i) {
      if (!state.undeleted(i)) continue;
      const Classification c = classify_constraint(state, problem, i, options);
      if (!acts_on(c.kind, options)) continue;
      if (options.max_iterations &&
          static_cast<int>(state.steps().size()) >= *options.max_iterations) {
        throw IterationLimitError(make_certificate(problem, state), stats);
      }
      apply_reduction(state, to_step(c, i, problem.rhs[i]));
      if (c.kind == ConstraintClass::kInfeasible) {
        outcome.verdict = SieveVerdict::kInfeasible;
        outcome.certificate = make_certificate(problem, state);
        outcome.iteration_count = static_cast<int>(state.steps().size());
        outcome.stats = stats;
        return outcome;
      }
      progress = true;
      break;
    }
  }

  auto [reduced, maps] = materialize(problem, state);
  outcome.verdict = SieveVerdict::kReduced;
  outcome.reduced = std::move(reduced);
  outcome.certificate = make_certificate(problem, state);
  outcome.iteration_count = static_cast<int>(state.steps().size());
  outcome.stats = stats;
  return outcome;
}

std::vector<std::string> verify_certificate(const SdpProblem& problem,
                                            const Certificate& certificate,
                                            const SieveOptions& options) {
  std::vector<std::string> errors;
  if (!(certificate.original_structure == problem.structure) ||
      certificate.original_num_constraints != problem.num_constraints()) {
    errors.push_back("certificate does not describe this problem");
    return errors;
  }
  SieveState state(problem, options);
  const int m = problem.num_constraints();
  for (std::size_t k = 0; k < certificate.steps.size(); ++k) {
    const ReductionStep& step = certificate.steps[k];
    const std::string tag = "step " + std::to_string(k) + ": ";
    if (step.constraint < 0 || step.constraint >= m) {
      errors.push_back(tag + "constraint index out of range");
      return errors;
    }
    if (!state.undeleted(step.constraint)) {
      errors.push_back(tag + "constraint already deleted");
      return errors;
    }
    if (step.kind == StepKind::kInfeasible &&
        k + 1 != certificate.steps.size()) {
      errors.push_back(tag + "infeasibility step is not final");
    }
    const Classification c =
        classify_constraint(state, problem, step.constraint, options);
    const ReductionStep expected = to_step(c, step.constraint,
                                           problem.rhs[step.constraint]);
    if (!acts_on(c.kind, options) || expected.kind != step.kind ||
        expected.sign != step.sign || expected.support != step.support) {
      errors.push_back(tag + "replay classifies constraint " +
                       std::to_string(step.constraint) + " as " +
                       constraint_class_name(c.kind));
      return errors;
    }
    if (step.rhs != problem.rhs[step.constraint]) {
      errors.push_back(tag + "recorded right-hand side differs from the "
                       "problem");
      return errors;
    }
    apply_reduction(state, step);
  }
  const Certificate replayed = make_certificate(problem, state);
  if (replayed.deleted_coordinates != certificate.deleted_coordinates) {
    errors.push_back("deleted coordinate set differs from replay");
  }
  if (replayed.deleted_constraints != certificate.deleted_constraints) {
    errors.push_back("deleted constraint set differs from replay");
  }
  if (!(replayed.index_maps == certificate.index_maps)) {
    errors.push_back("index maps differ from replay");
  }
  return errors;
}

}  // namespace sdpsieve
