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

#include "sdpsieve/recovery.h"

#include <algorithm>
#include <cmath>

#include "sdpsieve/errors.h"
#include "sdpsieve/linalg.h"

namespace sdpsieve {
namespace {

void check_reduced_dims(const Certificate& certificate,
                        std::span<const double> y_reduced) {
  if (y_reduced.size() != certificate.index_maps.constraint_origin.size()) {
    throw InputError("reduced dual vector has length " +
                     std::to_string(y_reduced.size()) + ", expected " +
                     std::to_string(
                         certificate.index_maps.constraint_origin.size()));
  }
}

std::vector<double> scatter_reduced(const Certificate& certificate,
                                    std::span<const double> y_reduced) {
  std::vector<double> y(certificate.original_num_constraints, 0.0);
  const auto& origin = certificate.index_maps.constraint_origin;
  for (std::size_t k = 0; k < origin.size(); ++k) y[origin[k]] = y_reduced[k];
  return y;
}

// Slack test restricted to the coordinates flagged in `active`.
bool slack_pd_on(const SdpProblem& problem, std::span<const double> y,
                 double shift, const std::vector<bool>& active) {
  const BlockStructure& s = problem.structure;
  const CoordinateIndex index(s);

  for (int f = 0; f < s.free_count; ++f) {
    double lhs = 0.0;
    for (int i = 0; i < problem.num_constraints(); ++i) {
      lhs += y[i] * problem.constraints[i].free_coeffs[f];
    }
    if (std::abs(lhs - problem.free_objective[f]) > 1e-9) return false;
  }

  // Dense position of each active coordinate inside its block.
  std::vector<int> position(index.dimension(), -1);
  std::vector<int> order(s.num_blocks(), 0);
  for (int f = 0; f < index.dimension(); ++f) {
    if (!active[f]) continue;
    const Coordinate c = index.coordinate(f);
    position[f] = order[c.block]++;
  }
  std::vector<DenseSym> slack;
  slack.reserve(s.num_blocks());
  for (int b = 0; b < s.num_blocks(); ++b) slack.emplace_back(order[b]);

  auto accumulate = [&](const SymBlockMatrix& m, double weight) {
    for (const MatrixEntry& e : m.entries()) {
      const int p = position[index.flat(e.block, e.i)];
      const int q = position[index.flat(e.block, e.j)];
      if (p < 0 || q < 0) continue;
      slack[e.block].add(p, q, weight * e.value);
    }
  };
  accumulate(problem.objective, 1.0);
  for (int i = 0; i < problem.num_constraints(); ++i) {
    if (y[i] != 0.0) accumulate(problem.constraints[i].matrix, -y[i]);
  }

  for (int b = 0; b < s.num_blocks(); ++b) {
    DenseSym& d = slack[b];
    if (d.order() == 0) continue;
    if (s.is_nonneg_block(b)) {
      if (!(d(0, 0) > -shift)) return false;
      continue;
    }
    for (int k = 0; k < d.order(); ++k) d.add(k, k, shift);
    if (!pd_check(d, 0.0)) return false;
  }
  return true;
}

}  // namespace

SymBlockMatrix pad_primal(const SymBlockMatrix& x_reduced,
                          const Certificate& certificate) {
  const IndexMaps& maps = certificate.index_maps;
  const BlockStructure& rs = maps.reduced_structure;
  const CoordinateIndex reduced(rs);
  if (static_cast<int>(maps.coordinate_origin.size()) != reduced.dimension()) {
    throw InputError("pad_primal: certificate index maps are inconsistent");
  }
  std::vector<MatrixEntry> out;
  out.reserve(x_reduced.nnz());
  for (const MatrixEntry& e : x_reduced.entries()) {
    if (e.block < 0 || e.block >= rs.num_blocks() ||
        std::max(e.i, e.j) >= rs.block_order(e.block) ||
        std::min(e.i, e.j) < 0) {
      throw InputError("pad_primal: entry does not conform to the reduced "
                       "structure");
    }
    const Coordinate a = maps.coordinate_origin[reduced.flat(e.block, e.i)];
    const Coordinate b = maps.coordinate_origin[reduced.flat(e.block, e.j)];
    out.push_back({a.block, std::min(a.row, b.row), std::max(a.row, b.row),
                   e.value});
  }
  return SymBlockMatrix(std::move(out));
}

SymBlockMatrix restrict_primal(const SymBlockMatrix& x_full,
                               const Certificate& certificate) {
  const IndexMaps& maps = certificate.index_maps;
  const CoordinateIndex original(certificate.original_structure);
  std::vector<Coordinate> target(original.dimension(), Coordinate{-1, -1});
  {
    const CoordinateIndex reduced(maps.reduced_structure);
    for (int f = 0; f < reduced.dimension(); ++f) {
      target[original.flat(maps.coordinate_origin[f])] = reduced.coordinate(f);
    }
  }
  std::vector<MatrixEntry> out;
  for (const MatrixEntry& e : x_full.entries()) {
    if (e.block < 0 || e.block >= certificate.original_structure.num_blocks() ||
        std::max(e.i, e.j) >=
            certificate.original_structure.block_order(e.block)) {
      throw InputError("restrict_primal: entry does not conform to the "
                       "original structure");
    }
    const Coordinate a = target[original.flat(e.block, e.i)];
    const Coordinate b = target[original.flat(e.block, e.j)];
    if (a.block < 0 || b.block < 0) continue;
    out.push_back({a.block, std::min(a.row, b.row), std::max(a.row, b.row),
                   e.value});
  }
  return SymBlockMatrix(std::move(out));
}

bool dual_slack_pd(const SdpProblem& problem, std::span<const double> y,
                   double shift) {
  if (static_cast<int>(y.size()) != problem.num_constraints()) {
    throw InputError("dual_slack_pd: y has the wrong length");
  }
  const std::vector<bool> all(problem.structure.dimension(), true);
  return slack_pd_on(problem, y, shift, all);
}

RecoveryResult basic_recovery(const SdpProblem& problem,
                              const Certificate& certificate,
                              std::span<const double> y_reduced,
                              const RecoveryOptions& options) {
  if (certificate.proves_infeasibility()) {
    throw InputError("basic_recovery: certificate proves infeasibility");
  }
  if (!(options.shift > 0)) throw InputError("basic_recovery: shift must be > 0");
  check_reduced_dims(certificate, y_reduced);
  RecoveryResult result;
  result.y = scatter_reduced(certificate, y_reduced);

  const CoordinateIndex index(problem.structure);
  const auto& steps = certificate.steps;
  // active_before[s] = coordinates alive when step s was taken.
  std::vector<std::vector<bool>> active_before(steps.size());
  std::vector<bool> active(index.dimension(), true);
  for (std::size_t s = 0; s < steps.size(); ++s) {
    active_before[s] = active;
    if (steps[s].kind != StepKind::kReducePsd) continue;
    for (const Coordinate& c : steps[s].support) active[index.flat(c)] = false;
  }

  for (int s = static_cast<int>(steps.size()) - 1; s >= 0; --s) {
    const ReductionStep& step = steps[s];
    double& yi = result.y[step.constraint];
    if (step.kind == StepKind::kDeleteZeroConstraint) {
      yi = 0.0;
      continue;
    }
    auto feasible = [&](double t) {
      yi = step.sign * t;
      return slack_pd_on(problem, result.y, options.shift, active_before[s]);
    };
    bool found = false;
    for (double t : {0.0, -1.0, -2.0}) {
      if (feasible(t)) {
        found = true;
        break;
      }
    }
    if (!found) {
      if (!feasible(-100.0)) {
        yi = 0.0;
        result.failed_step = s;
        return result;
      }
      found = false;
      for (int t = -3; t > -100 && !found; --t) found = feasible(t);
      if (!found) yi = step.sign * -100.0;
    }
  }
  result.recovered = true;
  return result;
}

RecoveryResult ideal_recovery_hook(const SdpProblem& problem,
                                   const Certificate& certificate,
                                   std::span<const double> y_reduced,
                                   const FeasibilitySolver& solver,
                                   const RecoveryOptions& options) {
  if (!solver) {
    throw UnsupportedError(
        "ideal recovery needs an external feasibility solver callback");
  }
  if (certificate.proves_infeasibility()) {
    throw InputError("ideal_recovery_hook: certificate proves infeasibility");
  }
  check_reduced_dims(certificate, y_reduced);
  IdealRecoveryRequest request;
  request.problem = &problem;
  request.certificate = &certificate;
  request.unknown_constraints = certificate.deleted_constraints;
  request.fixed_y = scatter_reduced(certificate, y_reduced);

  RecoveryResult result;
  result.y = request.fixed_y;
  const auto answer = solver(request);
  if (!answer || answer->size() != request.unknown_constraints.size()) {
    return result;
  }
  for (std::size_t k = 0; k < answer->size(); ++k) {
    result.y[request.unknown_constraints[k]] = (*answer)[k];
  }
  if (!dual_slack_pd(problem, result.y, options.shift)) {
    result.y = request.fixed_y;
    return result;
  }
  result.recovered = true;
  return result;
}

}  // namespace sdpsieve
