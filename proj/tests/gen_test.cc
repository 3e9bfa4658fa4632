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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.h"
#include "sdpsieve/errors.h"
#include "sdpsieve/sieve.h"

namespace sdpsieve {
namespace {

Eigen::MatrixXd to_eigen(const DenseMatrix& t) {
  Eigen::MatrixXd e(t.rows(), t.cols());
  for (int i = 0; i < t.rows(); ++i) {
    for (int j = 0; j < t.cols(); ++j) e(i, j) = t(i, j);
  }
  return e;
}

DenseMatrix from_eigen(const Eigen::MatrixXd& e) {
  DenseMatrix t(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
  for (int i = 0; i < e.rows(); ++i) {
    for (int j = 0; j < e.cols(); ++j) t(i, j) = e(i, j);
  }
  return t;
}

TEST(Example1, EntriesAndRhs) {
  const SdpProblem p = gen_example1();
  EXPECT_EQ(p.structure.psd_blocks, std::vector<int>{3});
  EXPECT_EQ(p.rhs, (std::vector<double>{0.0, -1.0}));
  EXPECT_EQ(p.constraints[0].matrix, SymBlockMatrix({{0, 0, 0, 1.0}}));
  EXPECT_EQ(p.constraints[1].matrix,
            SymBlockMatrix({{0, 0, 2, 1.0}, {0, 1, 1, 1.0}}));
  EXPECT_TRUE(p.objective.empty());
  EXPECT_TRUE(validate(p).empty());
  EXPECT_EQ(sieve(p).verdict, SieveVerdict::kInfeasible);
}

TEST(Posgap, Data) {
  const SdpProblem p = gen_posgap();
  EXPECT_EQ(p.rhs, (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(p.objective, SymBlockMatrix({{0, 0, 0, 1.0}, {0, 1, 1, 1.0}}));
  EXPECT_EQ(p.constraints[1], gen_example1().constraints[1]);
  EXPECT_TRUE(validate(p).empty());
}

TEST(PosgapEps, ObjectiveViolationAndDefiniteness) {
  for (double eps : {0.5, 1e-2, 1e-3, 1e-4}) {
    const SymBlockMatrix x = gen_posgap_eps(eps);
    const SdpProblem p = gen_posgap();
    const BlockStructure& s = p.structure;
    EXPECT_NEAR(oracle::trace_inner(p.objective, x, s), 2 * eps, 1e-15);
    EXPECT_NEAR(oracle::trace_inner(p.constraints[0].matrix, x, s), eps, 1e-15);
    EXPECT_NEAR(oracle::trace_inner(p.constraints[1].matrix, x, s), 1.0, 1e-15);
    const Eigen::MatrixXd d = oracle::dense_blocks(x, s)[0];
    EXPECT_GE(oracle::eigen_min(d), -1e-12 * d.norm());
  }
  EXPECT_THROW(gen_posgap_eps(0.0), InputError);
  EXPECT_THROW(gen_posgap_eps(1.0), InputError);
}

TEST(SimilarityTransform, IdentityLeavesProblemUnchanged) {
  const SdpProblem p = gen_posgap();
  EXPECT_EQ(similarity_transform(p, DenseMatrix::identity(3)), p);
}

TEST(SimilarityTransform, InverseTransformRestoresEntries) {
  const PlantedInstance inst = gen_planted(4, 6, 5, 2);
  const DenseMatrix t = random_transform(inst.problem.structure, 12);
  const Eigen::MatrixXd inv = to_eigen(t).inverse();
  const SdpProblem back =
      similarity_transform(similarity_transform(inst.problem, t), from_eigen(inv));
  const auto& s = inst.problem.structure;
  for (int i = 0; i < inst.problem.num_constraints(); ++i) {
    const auto a = oracle::dense_blocks(inst.problem.constraints[i].matrix, s)[0];
    const auto b = oracle::dense_blocks(back.constraints[i].matrix, s)[0];
    EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(SimilarityTransform, PreservesFeasibility) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 20; ++t) {
    Eigen::MatrixXd g(4, 4), tm(4, 4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        g(i, j) = u(rng);
        tm(i, j) = u(rng) + (i == j ? 3.0 : 0.0);
      }
    }
    const Eigen::MatrixXd x = g * g.transpose();
    std::vector<oracle::Rows> a(3, oracle::Rows(4, std::vector<double>(4)));
    std::vector<double> b;
    for (auto& r : a) {
      r = oracle::random_symmetric(rng, 4);
      b.push_back((oracle::to_eigen(r).array() * x.array()).sum());
    }
    const SdpProblem p = oracle::dense_problem(oracle::random_symmetric(rng, 4), a, b);
    const SdpProblem q = similarity_transform(p, from_eigen(tm));
    const Eigen::MatrixXd tinv = tm.inverse();
    const Eigen::MatrixXd y = tinv * x * tinv.transpose();
    for (int i = 0; i < 3; ++i) {
      const auto ai = oracle::dense_blocks(q.constraints[i].matrix, q.structure)[0];
      EXPECT_NEAR((ai.array() * y.array()).sum(), b[i], 1e-10);
    }
    EXPECT_GE(oracle::eigen_min(y), -1e-12);
  }
}

TEST(SimilarityTransform, RejectsBadTransforms) {
  EXPECT_THROW(similarity_transform(gen_posgap(), DenseMatrix(3, 2)), InputError);
  EXPECT_THROW(similarity_transform(gen_posgap(), DenseMatrix::identity(4)),
               InputError);
  SdpProblem two;
  two.structure.psd_blocks = {1, 1};
  DenseMatrix t = DenseMatrix::identity(2);
  t(0, 1) = 1.0;
  EXPECT_THROW(similarity_transform(two, t), InputError);
}

TEST(Messy, SeedStableAndSeedSensitive) {
  const MessyInstance a = gen_messy(gen_example1(), 3);
  const MessyInstance b = gen_messy(gen_example1(), 3);
  const MessyInstance c = gen_messy(gen_example1(), 4);
  EXPECT_EQ(a.problem, b.problem);
  EXPECT_EQ(a.row_ops, b.row_ops);
  EXPECT_FALSE(a.problem == c.problem);
}

TEST(Messy, RecordedOperationsReplayExactly) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const PlantedInstance base = gen_planted(seed, 6, 5, 2);
    const MessyInstance mi = gen_messy(base.problem, seed);
    const int m = base.problem.num_constraints();
    Eigen::MatrixXd u(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) u(i, j) = static_cast<double>(mi.row_ops[i][j]);
    }
    EXPECT_NEAR(std::abs(u.determinant()), 1.0, 1e-9);
    const Eigen::MatrixXd t = to_eigen(mi.transform);
    const auto& s = base.problem.structure;
    for (int i = 0; i < m; ++i) {
      Eigen::MatrixXd comb = Eigen::MatrixXd::Zero(6, 6);
      double b = 0.0;
      for (int j = 0; j < m; ++j) {
        comb += u(i, j) * oracle::dense_blocks(base.problem.constraints[j].matrix, s)[0];
        b += u(i, j) * base.problem.rhs[j];
      }
      const Eigen::MatrixXd want = t.transpose() * comb * t;
      const auto got = oracle::dense_blocks(mi.problem.constraints[i].matrix, s)[0];
      EXPECT_LE((want - got).cwiseAbs().maxCoeff(), 1e-9 * (1 + want.norm()));
      EXPECT_NEAR(mi.problem.rhs[i], b, 1e-12 * (1 + std::abs(b)));
    }
    // The obscured problem has the same feasible set: T^-1 X T^-T works.
    const Eigen::MatrixXd tinv = t.inverse();
    const Eigen::MatrixXd y =
        tinv * oracle::dense_blocks(base.feasible_x, s)[0] * tinv.transpose();
    for (int i = 0; i < m; ++i) {
      const auto a = oracle::dense_blocks(mi.problem.constraints[i].matrix, s)[0];
      EXPECT_NEAR((a.array() * y.array()).sum(), mi.problem.rhs[i],
                  1e-8 * (1 + std::abs(mi.problem.rhs[i])));
    }
  }
}

TEST(Messy, HidesExample1FromTheSieve) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const MessyInstance mi = gen_messy(gen_example1(), seed);
    EXPECT_TRUE(validate(mi.problem).empty());
    EXPECT_EQ(sieve(mi.problem).iteration_count, 0) << seed;
  }
}

TEST(Planted, WellFormedWithDisjointSupports) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    PlantedOptions o;
    o.seed = seed;
    o.blocks = {7, 9, 4};
    o.m = 15;
    o.k = static_cast<int>(seed % 7);
    o.chained = seed % 3 == 0;
    o.infeasible = o.k > 0 && seed % 5 == 0;
    const PlantedInstance inst = gen_planted(o);
    EXPECT_TRUE(validate(inst.problem).empty());
    std::set<Coordinate> seen;
    for (const auto& sup : inst.record.supports) {
      EXPECT_TRUE(std::is_sorted(sup.begin(), sup.end()));
      for (const Coordinate& c : sup) EXPECT_TRUE(seen.insert(c).second);
    }
    EXPECT_EQ(std::set<int>(inst.record.constraints.begin(),
                            inst.record.constraints.end())
                  .size(),
              static_cast<std::size_t>(o.k));
  }
}

TEST(Planted, FeasiblePointIsPsdSatisfiesConstraintsAndAvoidsSupports) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    PlantedOptions o;
    o.seed = seed;
    o.blocks = {6, 10};
    o.m = 12;
    o.k = 4;
    const PlantedInstance inst = gen_planted(o);
    const auto& s = inst.problem.structure;
    const auto x = oracle::dense_blocks(inst.feasible_x, s);
    for (const auto& blk : x) EXPECT_GE(oracle::eigen_min(blk), -1e-12);
    for (int i = 0; i < inst.problem.num_constraints(); ++i) {
      const auto a = oracle::dense_blocks(inst.problem.constraints[i].matrix, s);
      EXPECT_NEAR(oracle::dense_dot(a, x), inst.problem.rhs[i], 1e-12);
    }
    for (const auto& sup : inst.record.supports) {
      for (const Coordinate& c : sup) {
        EXPECT_EQ(x[c.block].row(c.row).cwiseAbs().maxCoeff(), 0.0);
      }
    }
  }
}

TEST(Planted, KZeroReducesNothing) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(sieve(gen_planted(seed, 12, 9, 0).problem).iteration_count, 0);
  }
}

TEST(Planted, ExplicitSupportSizes) {
  PlantedOptions o;
  o.seed = 8;
  o.blocks = {10};
  o.m = 6;
  o.k = 3;
  o.support_sizes = {1, 2, 2};
  const PlantedInstance inst = gen_planted(o);
  std::set<Coordinate> planted;
  for (const auto& sup : inst.record.supports) planted.insert(sup.begin(), sup.end());
  EXPECT_EQ(planted.size(), 5u);
  const Certificate cert = sieve(inst.problem).certificate;
  EXPECT_EQ(std::set<Coordinate>(cert.deleted_coordinates.begin(),
                                 cert.deleted_coordinates.end()),
            planted);
}

TEST(Planted, ChainLinksBecomeDefiniteOnlyAfterTheirPredecessor) {
  PlantedOptions o;
  o.seed = 21;
  o.blocks = {25};
  o.m = 10;
  o.k = 4;
  o.chained = true;
  const PlantedInstance inst = gen_planted(o);
  const auto& s = inst.problem.structure;
  std::set<Coordinate> deleted;
  // Sign-adjusted definiteness of plant j on its live support.
  auto definite = [&](int j) {
    const auto a = oracle::dense_blocks(
        inst.problem.constraints[inst.record.constraints[j]].matrix, s);
    std::vector<Coordinate> live;
    for (const auto& e :
         inst.problem.constraints[inst.record.constraints[j]].matrix.entries()) {
      for (int r : {e.i, e.j}) {
        const Coordinate c{e.block, r};
        if (!deleted.count(c)) live.push_back(c);
      }
    }
    std::sort(live.begin(), live.end());
    live.erase(std::unique(live.begin(), live.end()), live.end());
    Eigen::MatrixXd d(live.size(), live.size());
    for (std::size_t p = 0; p < live.size(); ++p) {
      for (std::size_t q = 0; q < live.size(); ++q) {
        d(p, q) = live[p].block == live[q].block
                      ? a[live[p].block](live[p].row, live[q].row)
                      : 0.0;
      }
    }
    return oracle::eigen_min(inst.record.signs[j] * d) > 0.0;
  };
  for (int j = 0; j < 4; ++j) {
    for (int later = j + 1; later < 4; ++later) EXPECT_FALSE(definite(later));
    EXPECT_TRUE(definite(j));
    deleted.insert(inst.record.supports[j].begin(), inst.record.supports[j].end());
  }
}

TEST(Planted, DeterministicPerSeed) {
  EXPECT_EQ(gen_planted(7, 20, 10, 3).problem, gen_planted(7, 20, 10, 3).problem);
  EXPECT_FALSE(gen_planted(7, 20, 10, 3).problem ==
               gen_planted(8, 20, 10, 3).problem);
}

TEST(Planted, RejectsImpossibleParameters) {
  EXPECT_THROW(gen_planted(1, 3, 2, 4), InputError);
  EXPECT_THROW(gen_planted(1, 10, 2, 3), InputError);
  PlantedOptions o;
  o.blocks = {3};
  o.m = 5;
  o.k = 2;
  o.support_sizes = {2, 1};
  EXPECT_THROW(gen_planted(o), InputError);
  o.k = 0;
  o.support_sizes = {};
  o.infeasible = true;
  EXPECT_THROW(gen_planted(o), InputError);
}

}  // namespace
}  // namespace sdpsieve
