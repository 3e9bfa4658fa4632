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

#include "sdpsieve/model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

namespace sdpsieve {
namespace {

bool key_less(const MatrixEntry& a, const MatrixEntry& b) {
  return std::tie(a.block, a.i, a.j) < std::tie(b.block, b.i, b.j);
}

bool same_key(const MatrixEntry& a, const MatrixEntry& b) {
  return a.block == b.block && a.i == b.i && a.j == b.j;
}

}  // namespace

int BlockStructure::block_order(int block) const {
  return is_nonneg_block(block) ? 1 : psd_blocks[block];
}

int BlockStructure::dimension() const {
  return std::accumulate(psd_blocks.begin(), psd_blocks.end(), 0) +
         nonneg_count;
}

CoordinateIndex::CoordinateIndex(const BlockStructure& structure) {
  const int blocks = structure.num_blocks();
  offsets_.reserve(blocks);
  for (int b = 0; b < blocks; ++b) {
    offsets_.push_back(static_cast<int>(block_of_.size()));
    block_of_.insert(block_of_.end(), structure.block_order(b), b);
  }
}

SymBlockMatrix::SymBlockMatrix(std::vector<MatrixEntry> entries)
    : entries_(std::move(entries)) {
  std::stable_sort(entries_.begin(), entries_.end(), key_less);
}

double SymBlockMatrix::at(int block, int i, int j) const {
  if (i > j) std::swap(i, j);
  const MatrixEntry probe{block, i, j, 0.0};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, key_less);
  if (it != entries_.end() && same_key(*it, probe)) return it->value;
  return 0.0;
}

SymBlockMatrix SymBlockMatrix::normalized() const {
  std::vector<MatrixEntry> out = entries_;
  for (auto& e : out) {
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::stable_sort(out.begin(), out.end(), key_less);
  std::vector<MatrixEntry> merged;
  merged.reserve(out.size());
  for (const auto& e : out) {
    if (!merged.empty() && same_key(merged.back(), e)) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const MatrixEntry& e) { return e.value == 0.0; });
  return SymBlockMatrix(std::move(merged));
}

double inner_product(const SymBlockMatrix& a, const SymBlockMatrix& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  double sum = 0.0;
  std::size_t p = 0, q = 0;
  while (p < x.size() && q < y.size()) {
    if (key_less(x[p], y[q])) {
      ++p;
    } else if (key_less(y[q], x[p])) {
      ++q;
    } else {
      const double w = x[p].i == x[p].j ? 1.0 : 2.0;
      sum += w * x[p].value * y[q].value;
      ++p;
      ++q;
    }
  }
  return sum;
}

const char* step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::kReducePsd:
      return "reduce_psd";
    case StepKind::kDeleteZeroConstraint:
      return "delete_zero";
    case StepKind::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

void validate_matrix(const SymBlockMatrix& m, const BlockStructure& s,
                     const std::string& label,
                     std::vector<std::string>& violations) {
  const auto& entries = m.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const MatrixEntry& e = entries[k];
    const std::string where = label + " entry (" + std::to_string(e.block) +
                              ", " + std::to_string(e.i) + ", " +
                              std::to_string(e.j) + ")";
    if (e.block < 0 || e.block >= s.num_blocks()) {
      violations.push_back(where + ": block out of range");
      continue;
    }
    const int order = s.block_order(e.block);
    if (e.i < 0 || e.j < 0 || e.i >= order || e.j >= order) {
      violations.push_back(where + ": index out of block range");
      continue;
    }
    if (e.i > e.j) {
      violations.push_back(where + ": lower-triangle entry (i > j)");
    }
    if (!std::isfinite(e.value)) {
      violations.push_back(where + ": non-finite value");
    } else if (e.value == 0.0) {
      violations.push_back(where + ": stored zero");
    }
    if (k > 0 && same_key(entries[k - 1], e)) {
      violations.push_back(where + ": duplicate entry");
    }
  }
}

std::vector<std::string> validate(const SdpProblem& problem) {
  std::vector<std::string> violations;
  const BlockStructure& s = problem.structure;
  for (std::size_t b = 0; b < s.psd_blocks.size(); ++b) {
    if (s.psd_blocks[b] < 1) {
      violations.push_back("psd block " + std::to_string(b) +
                           " has order < 1");
    }
  }
  if (s.nonneg_count < 0) violations.push_back("negative nonneg_count");
  if (s.free_count < 0) violations.push_back("negative free_count");
  if (!violations.empty()) return violations;

  validate_matrix(problem.objective, s, "objective", violations);
  if (static_cast<int>(problem.free_objective.size()) != s.free_count) {
    violations.push_back("free objective has length " +
                         std::to_string(problem.free_objective.size()) +
                         ", expected " + std::to_string(s.free_count));
  }
  for (int i = 0; i < problem.num_constraints(); ++i) {
    const Constraint& c = problem.constraints[i];
    const std::string label = "constraint " + std::to_string(i);
    validate_matrix(c.matrix, s, label, violations);
    if (static_cast<int>(c.free_coeffs.size()) != s.free_count) {
      violations.push_back(label + ": free coefficient vector has length " +
                           std::to_string(c.free_coeffs.size()) +
                           ", expected " + std::to_string(s.free_count));
    }
    for (double f : c.free_coeffs) {
      if (!std::isfinite(f)) {
        violations.push_back(label + ": non-finite free coefficient");
        break;
      }
    }
  }
  if (static_cast<int>(problem.rhs.size()) != problem.num_constraints()) {
    violations.push_back("rhs has length " +
                         std::to_string(problem.rhs.size()) + ", expected " +
                         std::to_string(problem.num_constraints()));
  }
  for (std::size_t i = 0; i < problem.rhs.size(); ++i) {
    if (!std::isfinite(problem.rhs[i])) {
      violations.push_back("rhs[" + std::to_string(i) + "] is not finite");
    }
  }
  return violations;
}

IndexMaps identity_maps(const BlockStructure& structure, int num_constraints) {
  IndexMaps maps;
  maps.reduced_structure = structure;
  const CoordinateIndex index(structure);
  maps.coordinate_origin.reserve(index.dimension());
  for (int f = 0; f < index.dimension(); ++f) {
    maps.coordinate_origin.push_back(index.coordinate(f));
  }
  maps.constraint_origin.resize(num_constraints);
  std::iota(maps.constraint_origin.begin(), maps.constraint_origin.end(), 0);
  return maps;
}

}  // namespace sdpsieve
