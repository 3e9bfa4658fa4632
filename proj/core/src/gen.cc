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

#include "sdpsieve/gen.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "sdpsieve/errors.h"

namespace sdpsieve {
namespace {

// Portable draws on top of mt19937_64 (the std distributions are
// implementation-defined, which would make seeded output platform-specific).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  int sign() { return (engine_() & 1) ? 1 : -1; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[i], v[below(i + 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

SymBlockMatrix rows_to_matrix(int block,
                              const std::vector<std::vector<double>>& rows) {
  const DenseSym d = DenseSym::from_rows(rows);
  std::vector<MatrixEntry> entries;
  for (int i = 0; i < d.order(); ++i) {
    for (int j = i; j < d.order(); ++j) {
      if (d(i, j) != 0.0) entries.push_back({block, i, j, d(i, j)});
    }
  }
  return SymBlockMatrix(std::move(entries));
}

SdpProblem three_by_three(const std::vector<std::vector<double>>& c, double b2) {
  SdpProblem p;
  p.structure.psd_blocks = {3};
  p.objective = rows_to_matrix(0, c);
  p.constraints.push_back({rows_to_matrix(0, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}), {}});
  p.constraints.push_back({rows_to_matrix(0, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), {}});
  p.rhs = {0.0, b2};
  return p;
}

SymBlockMatrix combine(const std::vector<const SymBlockMatrix*>& mats,
                       const std::vector<std::int64_t>& weights) {
  std::vector<MatrixEntry> entries;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (weights[k] == 0) continue;
    for (MatrixEntry e : mats[k]->entries()) {
      e.value *= static_cast<double>(weights[k]);
      entries.push_back(e);
    }
  }
  return SymBlockMatrix(std::move(entries)).normalized();
}

}  // namespace

SdpProblem gen_example1() {
  return three_by_three({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, -1.0);
}

SdpProblem gen_posgap() {
  return three_by_three({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}, 1.0);
}

SymBlockMatrix gen_posgap_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw InputError("gen_posgap_eps: eps must lie in (0, 1)");
  }
  const double off = (1.0 - eps) / 2.0;
  const double corner = (1.0 - eps) * (1.0 - eps) / (4.0 * eps);
  return SymBlockMatrix({{0, 0, 0, eps}, {0, 0, 2, off}, {0, 1, 1, eps},
                         {0, 2, 2, corner}});
}

SdpProblem similarity_transform(const SdpProblem& problem,
                                const DenseMatrix& t) {
  const BlockStructure& s = problem.structure;
  const int n = s.dimension();
  if (t.rows() != t.cols()) {
    throw InputError("similarity_transform: T is not square");
  }
  if (t.rows() != n) {
    throw InputError("similarity_transform: T has order " +
                     std::to_string(t.rows()) + ", problem has n = " +
                     std::to_string(n));
  }
  const CoordinateIndex index(s);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (t(i, j) != 0.0 &&
          index.coordinate(i).block != index.coordinate(j).block) {
        throw InputError(
            "similarity_transform: T is not block diagonal for this problem");
      }
    }
  }

  auto transform = [&](const SymBlockMatrix& m) {
    std::vector<DenseSym> blocks = to_dense(m, s);
    for (int b = 0; b < s.num_blocks(); ++b) {
      const int k = s.block_order(b);
      const int off = index.offset(b);
      const DenseSym& a = blocks[b];
      // tmp = A T_b, then out = T_b' tmp.
      std::vector<double> tmp(static_cast<std::size_t>(k) * k, 0.0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          double sum = 0.0;
          for (int r = 0; r < k; ++r) sum += a(i, r) * t(off + r, off + j);
          tmp[i * k + j] = sum;
        }
      }
      DenseSym out(k);
      for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
          double sum = 0.0;
          for (int r = 0; r < k; ++r) sum += t(off + r, off + i) * tmp[r * k + j];
          out.set(i, j, sum);
        }
      }
      blocks[b] = std::move(out);
    }
    return from_dense(blocks);
  };

  SdpProblem out = problem;
  out.objective = transform(problem.objective);
  for (Constraint& c : out.constraints) c.matrix = transform(c.matrix);
  return out;
}

DenseMatrix random_transform(const BlockStructure& structure,
                             std::uint64_t seed) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const CoordinateIndex index(structure);
  const int n = index.dimension();
  DenseMatrix t(n, n);
  for (int b = 0; b < structure.num_blocks(); ++b) {
    const int k = structure.block_order(b);
    const int off = index.offset(b);
    for (int i = 0; i < k; ++i) {
      double row_sum = 0.0;
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        const double v = rng.uniform(-1.0, 1.0);
        t(off + i, off + j) = v;
        row_sum += std::abs(v);
      }
      t(off + i, off + i) = rng.sign() * (row_sum + rng.uniform(0.5, 1.5));
    }
  }
  return t;
}

MessyInstance gen_messy(const SdpProblem& problem, std::uint64_t seed) {
  const auto violations = validate(problem);
  if (!violations.empty()) {
    throw InputError("gen_messy: invalid problem: " + violations.front());
  }
  Rng rng(seed);
  const int m = problem.num_constraints();
  std::vector<std::vector<std::int64_t>> u(m, std::vector<std::int64_t>(m, 0));
  for (int i = 0; i < m; ++i) u[i][i] = 1;

  const int ops = 3 * m;
  for (int op = 0; op < ops; ++op) {
    const int i = rng.below(m);
    if (m == 1 || rng.below(5) == 0) {
      for (auto& v : u[i]) v = -v;
      continue;
    }
    int j = rng.below(m - 1);
    if (j >= i) ++j;
    static constexpr int kMultipliers[] = {-2, -1, 1, 2};
    const int c = kMultipliers[rng.below(4)];
    for (int col = 0; col < m; ++col) u[i][col] += c * u[j][col];
  }

  SdpProblem mixed = problem;
  std::vector<const SymBlockMatrix*> mats;
  for (const Constraint& c : problem.constraints) mats.push_back(&c.matrix);
  for (int i = 0; i < m; ++i) {
    mixed.constraints[i].matrix = combine(mats, u[i]);
    double b = 0.0;
    std::vector<double> f(problem.structure.free_count, 0.0);
    for (int j = 0; j < m; ++j) {
      b += static_cast<double>(u[i][j]) * problem.rhs[j];
      for (int k = 0; k < problem.structure.free_count; ++k) {
        f[k] += static_cast<double>(u[i][j]) *
                problem.constraints[j].free_coeffs[k];
      }
    }
    mixed.rhs[i] = b;
    mixed.constraints[i].free_coeffs = std::move(f);
  }

  MessyInstance out;
  out.transform = random_transform(problem.structure, seed);
  out.problem = similarity_transform(mixed, out.transform);
  out.row_ops = std::move(u);
  return out;
}

PlantedInstance gen_planted(const PlantedOptions& options) {
  BlockStructure structure;
  structure.psd_blocks = options.blocks;
  if (options.blocks.empty()) throw InputError("gen_planted: no blocks");
  for (int order : options.blocks) {
    if (order < 1) throw InputError("gen_planted: block order must be >= 1");
  }
  const CoordinateIndex index(structure);
  const int n = index.dimension();
  const int m = options.m;
  const int k = options.k;
  if (k < 0 || m < 0 || k > m || k > n) {
    throw InputError("gen_planted: need 0 <= k <= min(m, n)");
  }
  if (options.infeasible && k == 0) {
    throw InputError("gen_planted: an infeasible family needs k >= 1");
  }
  if (!options.support_sizes.empty() &&
      static_cast<int>(options.support_sizes.size()) != k) {
    throw InputError("gen_planted: support_sizes must have k entries");
  }
  if (options.support_sizes.empty() && options.max_support < 1) {
    throw InputError("gen_planted: max_support must be >= 1");
  }

  Rng rng(options.seed);
  std::vector<int> sizes = options.support_sizes;
  if (sizes.empty()) {
    // Drawn sizes are clamped so that every plant and the filler pair fit.
    int room = n - (m > k ? 2 : 0);
    for (int j = 0; j < k; ++j) {
      const int draw = 1 + rng.below(options.max_support);
      const int sz = std::max(1, std::min(draw, room - (k - j - 1)));
      sizes.push_back(sz);
      room -= sz;
    }
  }
  const int planted_total = std::accumulate(sizes.begin(), sizes.end(), 0);
  for (int sz : sizes) {
    if (sz < 1) throw InputError("gen_planted: support sizes must be >= 1");
  }
  const int fillers = m - k;
  if (planted_total > n || (fillers > 0 && planted_total + 2 > n)) {
    throw InputError("gen_planted: supports do not fit into dimension " +
                     std::to_string(n));
  }

  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  rng.shuffle(pool);

  PlantRecord record;
  record.chained = options.chained;
  record.infeasible = options.infeasible;
  std::vector<std::vector<int>> flat_supports;
  std::size_t next = 0;
  for (int j = 0; j < k; ++j) {
    std::vector<int> support(pool.begin() + next, pool.begin() + next + sizes[j]);
    next += sizes[j];
    std::sort(support.begin(), support.end());
    flat_supports.push_back(support);
    std::vector<Coordinate> coords;
    for (int f : support) coords.push_back(index.coordinate(f));
    record.supports.push_back(std::move(coords));
    record.signs.push_back(rng.sign());
  }
  const std::vector<int> unplanted(pool.begin() + next, pool.end());

  // Constraint positions: plants take k random slots; a chain is placed in
  // decreasing index order so every link needs a fresh scan.
  std::vector<int> slots(m);
  std::iota(slots.begin(), slots.end(), 0);
  rng.shuffle(slots);
  std::vector<int> plant_slots(slots.begin(), slots.begin() + k);
  if (options.chained) std::sort(plant_slots.rbegin(), plant_slots.rend());
  record.constraints = plant_slots;

  SdpProblem problem;
  problem.structure = structure;
  problem.constraints.resize(m);
  problem.rhs.assign(m, 0.0);

  for (int j = 0; j < k; ++j) {
    const std::vector<int>& support = flat_supports[j];
    const int sign = record.signs[j];
    const int sz = static_cast<int>(support.size());
    std::vector<double> row_abs(sz, 0.0);
    std::vector<MatrixEntry> entries;
    for (int p = 0; p < sz; ++p) {
      for (int q = p + 1; q < sz; ++q) {
        const Coordinate a = index.coordinate(support[p]);
        const Coordinate b = index.coordinate(support[q]);
        if (a.block != b.block || rng.uniform() < 0.3) continue;
        const double v = rng.uniform(-1.0, 1.0);
        if (v == 0.0) continue;
        row_abs[p] += std::abs(v);
        row_abs[q] += std::abs(v);
        entries.push_back({a.block, a.row, b.row, sign * v});
      }
    }
    for (int p = 0; p < sz; ++p) {
      const Coordinate a = index.coordinate(support[p]);
      entries.push_back(
          {a.block, a.row, a.row, sign * (row_abs[p] + rng.uniform(0.5, 1.5))});
    }
    if (options.chained && j > 0) {
      const std::vector<int>& prev = flat_supports[j - 1];
      const Coordinate c = index.coordinate(prev[rng.below(static_cast<int>(prev.size()))]);
      entries.push_back({c.block, c.row, c.row, -sign * rng.uniform(0.5, 1.5)});
    }
    problem.constraints[plant_slots[j]].matrix =
        SymBlockMatrix(std::move(entries)).normalized();
  }

  for (int f = k; f < m; ++f) {
    const int slot = slots[f];
    const int up = static_cast<int>(unplanted.size());
    const int p = unplanted[rng.below(up)];
    int q = unplanted[rng.below(up - 1)];
    if (q == p) q = unplanted[up - 1];
    const Coordinate cp = index.coordinate(p);
    const Coordinate cq = index.coordinate(q);
    std::vector<MatrixEntry> entries;
    std::set<std::tuple<int, int, int>> used = {{cp.block, cp.row, cp.row},
                                                {cq.block, cq.row, cq.row}};
    entries.push_back({cp.block, cp.row, cp.row, rng.uniform(0.5, 1.5)});
    entries.push_back({cq.block, cq.row, cq.row, -rng.uniform(0.5, 1.5)});
    for (int e = 0; e < options.filler_density; ++e) {
      const Coordinate a = index.coordinate(rng.below(n));
      const int other = rng.below(structure.block_order(a.block));
      const int i = std::min(a.row, other);
      const int jj = std::max(a.row, other);
      if (!used.insert({a.block, i, jj}).second) continue;
      const double v = rng.uniform(-1.0, 1.0);
      if (v == 0.0) continue;
      entries.push_back({a.block, i, jj, v});
    }
    problem.constraints[slot].matrix = SymBlockMatrix(std::move(entries));
  }

  {
    std::vector<MatrixEntry> c;
    for (int f = 0; f < n; ++f) {
      const Coordinate a = index.coordinate(f);
      c.push_back({a.block, a.row, a.row, rng.uniform(0.5, 1.5)});
      const int other = rng.below(structure.block_order(a.block));
      if (other > a.row) c.push_back({a.block, a.row, other, rng.uniform(-0.5, 0.5)});
    }
    problem.objective = SymBlockMatrix(std::move(c)).normalized();
  }

  PlantedInstance out;
  if (!options.infeasible) {
    // X = G G' on the unplanted coordinates of each block.
    std::vector<bool> planted(n, false);
    for (const auto& s : flat_supports) {
      for (int f : s) planted[f] = true;
    }
    std::vector<MatrixEntry> x;
    for (int b = 0; b < structure.num_blocks(); ++b) {
      std::vector<int> rows;
      for (int r = 0; r < structure.block_order(b); ++r) {
        if (!planted[index.flat(b, r)]) rows.push_back(r);
      }
      const int sz = static_cast<int>(rows.size());
      std::vector<double> g(static_cast<std::size_t>(sz) * sz);
      for (double& v : g) v = rng.uniform(-1.0, 1.0);
      for (int p = 0; p < sz; ++p) {
        for (int q = p; q < sz; ++q) {
          double sum = 0.0;
          for (int t = 0; t < sz; ++t) sum += g[p * sz + t] * g[q * sz + t];
          if (sum != 0.0) x.push_back({b, rows[p], rows[q], sum});
        }
      }
    }
    out.feasible_x = SymBlockMatrix(std::move(x));
    for (int f = k; f < m; ++f) {
      problem.rhs[slots[f]] =
          inner_product(problem.constraints[slots[f]].matrix, out.feasible_x);
    }
  } else {
    for (int f = k; f < m; ++f) {
      problem.rhs[slots[f]] = rng.uniform(-1.0, 1.0);
    }
    problem.rhs[plant_slots[k - 1]] = -record.signs[k - 1] * 1.0;
  }

  out.problem = std::move(problem);
  out.record = std::move(record);
  return out;
}

PlantedInstance gen_planted(std::uint64_t seed, int n, int m, int k) {
  PlantedOptions options;
  options.seed = seed;
  options.blocks = {n};
  options.m = m;
  options.k = k;
  return gen_planted(options);
}

}  // namespace sdpsieve
