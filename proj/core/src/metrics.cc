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

#include "sdpsieve/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sdpsieve/errors.h"
#include "sdpsieve/linalg.h"

namespace sdpsieve {

double DimacsErrors::max_abs() const {
  return std::max({std::abs(err1), std::abs(err2), std::abs(err3),
                   std::abs(err4), std::abs(err5), std::abs(err6)});
}

namespace {

void require_conforming(const SymBlockMatrix& m, const BlockStructure& s,
                        const char* label) {
  std::vector<std::string> violations;
  validate_matrix(m, s, label, violations);
  for (const auto& v : violations) {
    // Stored zeros are harmless here.
    if (v.find("stored zero") == std::string::npos) {
      throw InputError("dimacs_errors: " + v);
    }
  }
}

double blockwise_min_eigenvalue(const std::vector<DenseSym>& blocks) {
  double lmin = std::numeric_limits<double>::infinity();
  for (const DenseSym& d : blocks) {
    if (d.order() > 0) lmin = std::min(lmin, min_eigenvalue(d));
  }
  return std::isfinite(lmin) ? lmin : 0.0;
}

double dense_inner(const std::vector<DenseSym>& a,
                   const std::vector<DenseSym>& b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto x = a[k].data();
    const auto y = b[k].data();
    for (std::size_t t = 0; t < x.size(); ++t) sum += x[t] * y[t];
  }
  return sum;
}

}  // namespace

DimacsErrors dimacs_errors(const SdpProblem& problem,
                           const Solution& solution) {
  const BlockStructure& s = problem.structure;
  const int m = problem.num_constraints();
  if (static_cast<int>(solution.y.size()) != m) {
    throw InputError("dimacs_errors: y has length " +
                     std::to_string(solution.y.size()) + ", expected " +
                     std::to_string(m));
  }
  std::vector<double> x_free = solution.x_free;
  if (x_free.empty()) x_free.assign(s.free_count, 0.0);
  if (static_cast<int>(x_free.size()) != s.free_count) {
    throw InputError("dimacs_errors: free primal vector has wrong length");
  }
  require_conforming(solution.x, s, "X");
  if (solution.z) require_conforming(*solution.z, s, "Z");

  double b_inf = 0.0;
  for (double b : problem.rhs) b_inf = std::max(b_inf, std::abs(b));
  double c_inf = 0.0;
  for (const MatrixEntry& e : problem.objective.entries()) {
    c_inf = std::max(c_inf, std::abs(e.value));
  }
  for (double c : problem.free_objective) c_inf = std::max(c_inf, std::abs(c));

  // Primal residual A(X) - b.
  double res2 = 0.0;
  for (int i = 0; i < m; ++i) {
    double ax = inner_product(problem.constraints[i].matrix, solution.x);
    for (int f = 0; f < s.free_count; ++f) {
      ax += problem.constraints[i].free_coeffs[f] * x_free[f];
    }
    const double r = ax - problem.rhs[i];
    res2 += r * r;
  }

  // A*(y) as dense blocks.
  std::vector<DenseSym> aty;
  aty.reserve(s.num_blocks());
  for (int b = 0; b < s.num_blocks(); ++b) aty.emplace_back(s.block_order(b));
  for (int i = 0; i < m; ++i) {
    if (solution.y[i] == 0.0) continue;
    for (const MatrixEntry& e : problem.constraints[i].matrix.entries()) {
      aty[e.block].add(e.i, e.j, solution.y[i] * e.value);
    }
  }
  const std::vector<DenseSym> c_dense = to_dense(problem.objective, s);
  const std::vector<DenseSym> x_dense = to_dense(solution.x, s);

  std::vector<DenseSym> z_dense;
  double slack_res2 = 0.0;
  if (solution.z) {
    z_dense = to_dense(*solution.z, s);
    for (int b = 0; b < s.num_blocks(); ++b) {
      const auto a = aty[b].data();
      const auto z = z_dense[b].data();
      const auto c = c_dense[b].data();
      for (std::size_t t = 0; t < a.size(); ++t) {
        const double r = a[t] + z[t] - c[t];
        slack_res2 += r * r;
      }
    }
  } else {
    z_dense = c_dense;
    for (int b = 0; b < s.num_blocks(); ++b) {
      const int n = s.block_order(b);
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) z_dense[b].add(i, j, -aty[b](i, j));
      }
    }
  }
  for (int f = 0; f < s.free_count; ++f) {
    double r = -problem.free_objective[f];
    for (int i = 0; i < m; ++i) {
      r += solution.y[i] * problem.constraints[i].free_coeffs[f];
    }
    slack_res2 += r * r;
  }

  double cx = dense_inner(c_dense, x_dense);
  for (int f = 0; f < s.free_count; ++f) {
    cx += problem.free_objective[f] * x_free[f];
  }
  double by = 0.0;
  for (int i = 0; i < m; ++i) by += problem.rhs[i] * solution.y[i];
  const double gap_denominator = 1.0 + std::abs(cx) + std::abs(by);

  DimacsErrors out;
  out.err1 = std::sqrt(res2) / (1.0 + b_inf);
  out.err2 = std::max(0.0, -blockwise_min_eigenvalue(x_dense) / (1.0 + b_inf));
  out.err3 = std::sqrt(slack_res2) / (1.0 + c_inf);
  out.err4 = std::max(0.0, -blockwise_min_eigenvalue(z_dense) / (1.0 + c_inf));
  out.err5 = (by - cx) / gap_denominator;
  out.err6 = dense_inner(z_dense, x_dense) / gap_denominator;
  return out;
}

std::vector<HelpCode> help_code(const SolveReport& before,
                                const AfterReport& after) {
  const auto* solved = std::get_if<SolveReport>(&after);
  if (before.out_of_memory || (solved && solved->out_of_memory)) {
    return {HelpCode::kOutOfMemory};
  }
  std::vector<HelpCode> codes;
  if (!solved) {
    codes.push_back(HelpCode::kPlus1);
    return codes;
  }
  if (!before.infeasible && solved->infeasible) {
    codes.push_back(HelpCode::kPlus1);
    return codes;
  }
  if (before.infeasible && !solved->infeasible) {
    codes.push_back(HelpCode::kMinus1);
    return codes;
  }

  const double d_before = before.dimacs_max_abs;
  const double d_after = solved->dimacs_max_abs;
  const double ratio = d_before > 0
                           ? d_after / d_before
                           : (d_after > 0
                                  ? std::numeric_limits<double>::infinity()
                                  : 1.0);
  bool minus2 = false;
  if (d_before > 1e-6 && ratio < 0.1) {
    codes.push_back(HelpCode::kPlus2);
  } else if (d_after > 1e-6 && ratio > 10.0) {
    codes.push_back(HelpCode::kMinus2);
    minus2 = true;
  }
  if (!minus2 && std::abs(before.primal_obj - solved->primal_obj) /
                         (1.0 + std::abs(before.primal_obj)) >
                     1e-6) {
    codes.push_back(HelpCode::kPlus3);
  }
  return codes;
}

std::string help_code_string(const std::vector<HelpCode>& codes) {
  std::string out;
  for (HelpCode c : codes) {
    if (!out.empty()) out += ',';
    switch (c) {
      case HelpCode::kPlus1:
        out += "1";
        break;
      case HelpCode::kMinus1:
        out += "-1";
        break;
      case HelpCode::kPlus2:
        out += "2";
        break;
      case HelpCode::kMinus2:
        out += "-2";
        break;
      case HelpCode::kPlus3:
        out += "3";
        break;
      case HelpCode::kOutOfMemory:
        out += "MM";
        break;
    }
  }
  return out;
}

std::size_t constraint_nnz(const SdpProblem& problem) {
  std::size_t nnz = 0;
  for (const Constraint& c : problem.constraints) nnz += c.matrix.nnz();
  return nnz;
}

ReductionRates reduction_stats(const SdpProblem& before,
                               const SdpProblem& after, double t_pre,
                               double t_solve_before, double t_solve_after) {
  if (t_pre < 0 || t_solve_before < 0 || t_solve_after < 0) {
    throw InputError("reduction_stats: times must be nonnegative");
  }
  ReductionRates r;
  r.n_before = before.structure.dimension();
  r.n_after = after.structure.dimension();
  r.m_before = before.num_constraints();
  r.m_after = after.num_constraints();
  r.nnz_before = constraint_nnz(before);
  r.nnz_after = constraint_nnz(after);
  auto rate = [](double b, double a) -> std::optional<double> {
    if (b == 0) return std::nullopt;
    return (b - a) / b;
  };
  r.n_reduction = rate(r.n_before, r.n_after);
  r.m_reduction = rate(r.m_before, r.m_after);
  r.nnz_reduction = rate(static_cast<double>(r.nnz_before),
                         static_cast<double>(r.nnz_after));
  if (t_solve_before > 0) {
    r.pre_vs_solve_percent = t_pre / t_solve_before * 100.0;
    r.time_reduction_percent =
        (t_solve_before - (t_pre + t_solve_after)) / t_solve_before * 100.0;
  }
  return r;
}

}  // namespace sdpsieve
