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

// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "sdpsieve/gen.h"
#include "sdpsieve/io.h"
#include "sdpsieve/linalg.h"
#include "sdpsieve/metrics.h"
#include "sdpsieve/recovery.h"
#include "sdpsieve/sieve.h"

namespace sdpsieve {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
  bool ok() const { return failures.empty(); }
};

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SDPSIEVE_TEST_DATA) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void example1_in_two_steps(Check& c) {
  const SdpProblem p = gen_example1();
  const auto t0 = Clock::now();
  const SieveOutcome out = sieve(p);
  const double elapsed = seconds_since(t0);
  const auto& steps = out.certificate.steps;
  c.expect(out.verdict == SieveVerdict::kInfeasible, "verdict is not infeasible");
  c.expect(steps.size() == 2, "expected 2 steps, got " + std::to_string(steps.size()));
  if (steps.size() == 2) {
    c.expect(steps[0].kind == StepKind::kReducePsd && steps[0].constraint == 0 &&
                 steps[0].support == std::vector<Coordinate>{{0, 0}},
             "step 1 must delete constraint 1 and coordinate 0");
    c.expect(steps[1].kind == StepKind::kInfeasible && steps[1].constraint == 1 &&
                 steps[1].rhs == -1.0,
             "step 2 must flag constraint 2 with b = -1");
  }
  c.expect(out.certificate.deleted_coordinates == std::vector<Coordinate>{{0, 0}},
           "deleted coordinates");
  c.expect(elapsed < 1e-3, "runtime " + num(elapsed * 1e3) + " ms");
  c.note = num(elapsed * 1e6) + " us";
}

void posgap_structure_and_recovery(Check& c) {
  const SdpProblem p = gen_posgap();
  const SieveOutcome out = sieve(p);
  c.expect(out.verdict == SieveVerdict::kReduced && out.reduced.has_value(),
           "posgap must reduce");
  if (!out.reduced) return;
  const SdpProblem& r = *out.reduced;
  c.expect(r.structure.psd_blocks == std::vector<int>{2} &&
               r.structure.nonneg_count == 0 && r.structure.free_count == 0,
           "reduced structure must be one order-2 block");
  c.expect(r.num_constraints() == 1, "reduced m must be 1");
  if (r.num_constraints() == 1) {
    c.expect(r.constraints[0].matrix == SymBlockMatrix({{0, 0, 0, 1.0}}),
             "reduced constraint matrix must be [[1,0],[0,0]]");
    c.expect(r.rhs == std::vector<double>{1.0}, "reduced rhs must be 1");
  }
  c.expect(r.objective == SymBlockMatrix({{0, 0, 0, 1.0}}),
           "reduced objective must be diag(1,0)");
  // Reduced optimum [[1,0],[0,0]] pads to the 3x3 matrix with a single one at
  // the middle diagonal position.
  const SymBlockMatrix padded =
      pad_primal(SymBlockMatrix({{0, 0, 0, 1.0}}), out.certificate);
  c.expect(padded == SymBlockMatrix({{0, 1, 1, 1.0}}), "padded optimum");
  // Dual optimum of the reduced problem: max y subject to diag(1,0) - y diag(1,0) PSD.
  const std::vector<double> y_reduced = {1.0};
  const RecoveryResult rec = basic_recovery(p, out.certificate, y_reduced);
  c.expect(!rec.recovered, "recovery must fail");
  c.expect(rec.failed_step == 0 && out.certificate.steps[0].constraint == 0,
           "recovery must fail at the first constraint");
}

void obfuscation_negative_control(Check& c) {
  const SdpProblem ex1 = gen_example1();
  const DenseMatrix fixed_t =
      DenseMatrix::from_rows({{3, 5, -2}, {4, 1, 1}, {-4, -4, 5}});
  c.expect(sieve(similarity_transform(ex1, fixed_t)).certificate.steps.empty(),
           "fixed T: steps found");
  int random_ok = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const DenseMatrix t = random_transform(ex1.structure, seed);
    const bool zero = sieve(similarity_transform(ex1, t)).certificate.steps.empty();
    c.expect(zero, "random T seed " + std::to_string(seed));
    random_ok += zero;
  }
  int messy_ok = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const bool zero = sieve(gen_messy(ex1, seed).problem).certificate.steps.empty();
    c.expect(zero, "messy seed " + std::to_string(seed));
    messy_ok += zero;
  }
  c.note = "random T " + std::to_string(random_ok) + "/100, messy " +
           std::to_string(messy_ok) + "/100";
}

void planted_oracle_equivalence(Check& c) {
  std::mt19937_64 rng(4242);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const auto t0 = Clock::now();
  int matched = 0;
  for (int t = 0; t < 500; ++t) {
    PlantedOptions o;
    o.seed = 90000 + t;
    o.k = uniform(0, 8);
    const int n = uniform(std::max(10, 3 * o.k + 4), 50);
    const int nb = uniform(1, 3);
    o.blocks.assign(nb, n / nb);
    o.blocks[0] += n % nb;
    o.m = uniform(std::max(o.k, 1), 80);
    o.max_support = 3;
    o.chained = o.k >= 2 && t % 2 == 1;
    o.filler_density = uniform(2, 10);
    const PlantedInstance inst = gen_planted(o);
    const SieveOutcome out = sieve(inst.problem);

    std::set<Coordinate> want_coords;
    for (const auto& s : inst.record.supports) want_coords.insert(s.begin(), s.end());
    const std::set<int> want_cons(inst.record.constraints.begin(),
                                  inst.record.constraints.end());
    const std::set<Coordinate> got_coords(out.certificate.deleted_coordinates.begin(),
                                          out.certificate.deleted_coordinates.end());
    const std::set<int> got_cons(out.certificate.deleted_constraints.begin(),
                                 out.certificate.deleted_constraints.end());
    bool ok = out.verdict == SieveVerdict::kReduced && got_coords == want_coords &&
              got_cons == want_cons;
    for (int i : got_cons) ok = ok && want_cons.count(i) == 1;
    c.expect(ok, "instance " + std::to_string(t) + " (seed " +
                     std::to_string(o.seed) + ") differs from its record");
    matched += ok;
  }
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 60.0, "runtime " + num(elapsed) + " s");
  c.note = std::to_string(matched) + "/500 in " + num(elapsed) + " s";
}

void safe_mode_band(Check& c) {
  auto classify = [](double b0) {
    SdpProblem p;
    p.structure.psd_blocks = {2};
    p.constraints.push_back({SymBlockMatrix({{0, 0, 0, 1.0}}), {}});
    p.constraints.push_back({SymBlockMatrix({{0, 1, 1, 1.0}}), {}});
    p.rhs = {b0, 1.0};
    const SieveState state(p, {});
    return classify_constraint(state, p, 0, {}).kind;
  };
  c.expect(classify(-1e-10) == ConstraintClass::kAmbiguous, "-1e-10 not Ambiguous");
  c.expect(classify(-1e-6) == ConstraintClass::kInfeasible, "-1e-6 not Infeasible");
  c.expect(classify(-1e-17) == ConstraintClass::kReduce, "-1e-17 not Reduce");
  SdpProblem p;
  p.structure.psd_blocks = {1};
  p.constraints.push_back({SymBlockMatrix({{0, 0, 0, 1.0}}), {}});
  p.rhs = {-1e-10};
  c.expect(sieve(p).certificate.steps.empty(), "Ambiguous constraint was not skipped");
}

// Diagonal instance with integer data built around an exact primal-dual pair.
struct ToyInstance {
  SdpProblem problem;
  Solution solution;
};

ToyInstance diagonal_toy(std::mt19937_64& rng) {
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int n = uniform(1, 6);
  const int nn = uniform(0, 3);
  const int m = uniform(1, 4);
  ToyInstance t;
  SdpProblem& p = t.problem;
  p.structure.psd_blocks = {n};
  p.structure.nonneg_count = nn;
  struct Slot {
    int block;
    int row;
  };
  std::vector<Slot> slots;
  for (int r = 0; r < n; ++r) slots.push_back({0, r});
  for (int k = 0; k < nn; ++k) slots.push_back({1 + k, 0});
  std::vector<double> x(slots.size()), z(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (uniform(0, 1) == 0) {
      x[s] = uniform(0, 5);
    } else {
      z[s] = uniform(0, 5);
    }
  }
  std::vector<double> y(m);
  for (double& v : y) v = uniform(-4, 4);
  std::vector<std::vector<double>> a(m, std::vector<double>(slots.size()));
  for (auto& row : a) {
    for (double& v : row) v = uniform(0, 2) == 0 ? 0.0 : uniform(-3, 3);
  }
  std::vector<MatrixEntry> c_entries, x_entries;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    double cs = z[s];
    for (int i = 0; i < m; ++i) cs += y[i] * a[i][s];
    if (cs != 0.0) c_entries.push_back({slots[s].block, slots[s].row, slots[s].row, cs});
    if (x[s] != 0.0) x_entries.push_back({slots[s].block, slots[s].row, slots[s].row, x[s]});
  }
  p.objective = SymBlockMatrix(c_entries);
  for (int i = 0; i < m; ++i) {
    std::vector<MatrixEntry> e;
    double b = 0.0;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (a[i][s] != 0.0) e.push_back({slots[s].block, slots[s].row, slots[s].row, a[i][s]});
      b += a[i][s] * x[s];
    }
    p.constraints.push_back({SymBlockMatrix(e), {}});
    p.rhs.push_back(b);
  }
  t.solution.x = SymBlockMatrix(x_entries);
  t.solution.y = y;
  return t;
}

void dimacs_suite(Check& c) {
  std::mt19937_64 rng(606);
  for (int t = 0; t < 100; ++t) {
    const ToyInstance toy = diagonal_toy(rng);
    c.expect(validate(toy.problem).empty(), "toy instance invalid");
    const DimacsErrors e = dimacs_errors(toy.problem, toy.solution);
    c.expect(std::abs(e.err1) <= 1e-12 && std::abs(e.err2) <= 1e-12 &&
                 std::abs(e.err3) <= 1e-12 && std::abs(e.err4) <= 1e-12 &&
                 std::abs(e.err5) <= 1e-12 && std::abs(e.err6) <= 1e-12,
             "toy " + std::to_string(t) + " max error " + num(e.max_abs()));
  }
  const SdpProblem pg = gen_posgap();
  Solution pair;
  pair.x = SymBlockMatrix({{0, 1, 1, 1.0}});
  pair.y = {0.5, 0.0};
  const DimacsErrors e = dimacs_errors(pg, pair);
  c.expect(std::abs(std::abs(e.err5) - 0.5) <= 1e-12, "posgap err5 " + num(e.err5));
  c.expect(e.err1 == 0.0 && e.err2 == 0.0 && e.err4 == 0.0,
           "posgap pair must be feasible");
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    Solution s;
    s.x = gen_posgap_eps(eps);
    s.y = {0.0, 0.0};
    const DimacsErrors ee = dimacs_errors(pg, s);
    c.expect(std::abs(ee.err1 - eps / 2) <= 1e-12, "X_eps err1 at eps " + num(eps));
    c.expect(std::abs(inner_product(pg.objective, s.x) - 2 * eps) <= 1e-12,
             "X_eps objective at eps " + num(eps));
  }
}

SolveReport report(bool infeasible, double dimacs, double obj) {
  SolveReport r;
  r.infeasible = infeasible;
  r.dimacs_max_abs = dimacs;
  r.primal_obj = obj;
  r.dual_obj = obj;
  return r;
}

void help_codes(Check& c) {
  c.expect(help_code(report(false, 2.22e1, 3.79e6), SieveInfeasible{}) ==
               std::vector<HelpCode>{HelpCode::kPlus1},
           "pair 1 is not {+1}");
  c.expect(help_code(report(false, 1.60e-6, 5.0), report(false, 4.23e-8, 5.0)) ==
               std::vector<HelpCode>{HelpCode::kPlus2},
           "pair 2 is not {+2}");
  c.expect(help_code(report(false, 3.36e-7, 1.0), report(false, 9.28e-2, 1.0)) ==
               std::vector<HelpCode>{HelpCode::kMinus2},
           "pair 3 is not {-2}");
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> expo(-10, 2);
  std::uniform_int_distribution<int> coin(0, 5);
  for (int t = 0; t < 10000; ++t) {
    const SolveReport before =
        report(coin(rng) == 0, std::pow(10.0, expo(rng)), coin(rng));
    AfterReport after = SieveInfeasible{};
    if (coin(rng) != 0) {
      after = report(coin(rng) == 0, std::pow(10.0, expo(rng)), coin(rng));
    }
    const auto codes = help_code(before, after);
    auto has = [&](HelpCode h) {
      return std::find(codes.begin(), codes.end(), h) != codes.end();
    };
    c.expect(!(has(HelpCode::kPlus1) && has(HelpCode::kMinus1)), "both +1 and -1");
    c.expect(!(has(HelpCode::kPlus2) && has(HelpCode::kMinus2)), "both +2 and -2");
  }
}

void feasibility_preservation(Check& c) {
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    PlantedOptions o;
    o.seed = 50000 + t;
    o.blocks = t % 2 == 0 ? std::vector<int>{24} : std::vector<int>{8, 10, 6};
    o.m = 10 + t % 20;
    o.k = 1 + t % 6;
    o.chained = t % 3 == 0;
    const PlantedInstance inst = gen_planted(o);
    const SdpProblem& p = inst.problem;
    const SieveOutcome out = sieve(p);
    if (out.verdict != SieveVerdict::kReduced) {
      c.expect(false, "instance " + std::to_string(t) + " reported infeasible");
      continue;
    }
    const SdpProblem& r = *out.reduced;
    const SymBlockMatrix xr = restrict_primal(inst.feasible_x, out.certificate);
    for (int i = 0; i < r.num_constraints(); ++i) {
      const double res = std::abs(inner_product(r.constraints[i].matrix, xr) - r.rhs[i]);
      worst = std::max(worst, res);
      c.expect(res <= 1e-12, "instance " + std::to_string(t) + " constraint residual " +
                                 num(res));
    }
    for (const Eigen::MatrixXd& block : oracle::dense_blocks(xr, r.structure)) {
      c.expect(oracle::eigen_min(block) >= -1e-12,
               "instance " + std::to_string(t) + " restriction not PSD");
    }
    const double gap = std::abs(inner_product(p.objective, inst.feasible_x) -
                                inner_product(r.objective, xr));
    worst = std::max(worst, gap);
    c.expect(gap <= 1e-12, "instance " + std::to_string(t) + " objective gap " + num(gap));
  }
  c.note = "worst residual " + num(worst);
}

void linalg_oracles(Check& c) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> order(1, 12);
  std::uniform_real_distribution<double> shift(-1.5, 1.5);
  int sampled = 0;
  int excluded = 0;
  double worst = 0.0;
  while (sampled < 1000) {
    const int n = order(rng);
    oracle::Rows rows;
    if (sampled % 2 == 0) {
      rows = oracle::random_symmetric(rng, n);
    } else {
      const oracle::Rows b = oracle::random_symmetric(rng, n);
      const double s = shift(rng);
      rows.assign(n, std::vector<double>(n, 0.0));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) rows[i][j] += b[i][k] * b[j][k];
        }
        rows[i][i] += s;
      }
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) rows[i][j] = rows[j][i];
      }
    }
    const double lambda = oracle::eigen_min(oracle::to_eigen(rows));
    if (std::abs(lambda) < 1e-12) {
      ++excluded;
      continue;
    }
    ++sampled;
    const DenseSym m = DenseSym::from_rows(rows);
    c.expect(static_cast<bool>(pd_check(m)) == (lambda > 0),
             "pd_check disagrees at order " + std::to_string(n));
    const auto exact = oracle::jacobi_eigenvalues(rows);
    const double jac =
        static_cast<double>(*std::min_element(exact.begin(), exact.end()));
    const double diff = std::abs(min_eigenvalue(m) - jac);
    worst = std::max(worst, diff);
    c.expect(diff <= 1e-8, "min_eigenvalue off by " + num(diff));
  }
  c.note = "1000 sampled, " + std::to_string(excluded) +
           " excluded, worst eigenvalue error " + num(worst);
}

SdpProblem fuzzed_problem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(0, 3);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::uniform_int_distribution<int> expo(-40, 40);
  SdpProblem p;
  const int psd = small(rng);
  for (int b = 0; b < psd; ++b) p.structure.psd_blocks.push_back(1 + small(rng) * 2);
  p.structure.nonneg_count = psd == 0 ? 1 + small(rng) : small(rng);
  auto value = [&] {
    double v = 0.0;
    while (v == 0.0) v = std::ldexp(u(rng), expo(rng));
    return v;
  };
  auto matrix = [&] {
    std::vector<MatrixEntry> e;
    for (int b = 0; b < p.structure.num_blocks(); ++b) {
      const int k = p.structure.block_order(b);
      for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
          if (small(rng) == 0) e.push_back({b, i, j, value()});
        }
      }
    }
    return SymBlockMatrix(std::move(e));
  };
  p.objective = matrix();
  const int m = small(rng) + small(rng);
  for (int i = 0; i < m; ++i) {
    p.constraints.push_back({matrix(), {}});
    p.rhs.push_back(small(rng) == 0 ? 0.0 : value());
  }
  return p;
}

void io_round_trips(Check& c) {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 200; ++t) {
    const std::string tag = "instance " + std::to_string(t);
    const SdpProblem p = fuzzed_problem(rng);
    const std::string text = write_sdpa(p);
    c.expect(read_sdpa(text) == p, tag + ": problem round trip");

    Solution s;
    s.x = p.objective;
    for (double b : p.rhs) s.y.push_back(b * 0.5 - 1.0);
    if (t % 2 == 0) s.z = p.objective;
    c.expect(read_solution(write_solution(s, p.structure), p) == s,
             tag + ": solution round trip");

    PlantedOptions o;
    o.seed = 123000 + t;
    o.blocks = {4 + t % 7, 3 + t % 4};
    o.m = 3 + t % 11;
    o.k = std::min(o.m, t % 4);
    o.chained = t % 2 == 1;
    o.infeasible = o.k > 0 && t % 5 == 0;
    const Certificate cert = sieve(gen_planted(o).problem).certificate;
    c.expect(read_certificate(write_certificate(cert)) == cert,
             tag + ": certificate round trip");
  }
  c.expect(write_sdpa(gen_example1()) == golden("example1.dat-s"),
           "example1 golden bytes");
  c.expect(write_sdpa(gen_posgap()) == golden("posgap.dat-s"), "posgap golden bytes");
  c.expect(write_certificate(sieve(gen_example1()).certificate) ==
               golden("example1.cert"),
           "example1 certificate golden bytes");
}

void scale_smoke(Check& c) {
  PlantedOptions o;
  o.seed = 11;
  o.blocks = {50, 50, 50, 50, 50, 50};
  o.m = 1000;
  o.k = 40;
  const PlantedInstance inst = gen_planted(o);
  const auto t0 = Clock::now();
  const SieveOutcome out = sieve(inst.problem);
  const double elapsed = seconds_since(t0);
  c.expect(out.verdict == SieveVerdict::kReduced, "verdict");
  c.expect(static_cast<int>(out.certificate.steps.size()) == 40,
           "steps " + std::to_string(out.certificate.steps.size()));
  c.expect(out.iteration_count <= o.m,
           "iteration_count " + std::to_string(out.iteration_count));
  c.expect(elapsed < 10.0, "runtime " + num(elapsed) + " s");
  c.note = num(elapsed) + " s, " + std::to_string(out.iteration_count) + " iterations, " +
           std::to_string(out.stats.passes) + " passes";
}

}  // namespace
}  // namespace sdpsieve

int main() {
  using namespace sdpsieve;
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"example1: infeasible in exactly two steps", example1_in_two_steps},
      {"posgap: reduced structure, padding, recovery failure",
       posgap_structure_and_recovery},
      {"obfuscated instances: no reductions", obfuscation_negative_control},
      {"planted instances: deletions match the record", planted_oracle_equivalence},
      {"safe-mode classification band", safe_mode_band},
      {"DIMACS error suite", dimacs_suite},
      {"help codes", help_codes},
      {"planted feasible points survive reduction", feasibility_preservation},
      {"linear algebra oracles", linalg_oracles},
      {"I/O round trips and golden files", io_round_trips},
      {"scale smoke test", scale_smoke},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s  %2zu  %s", check.ok() ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str());
    if (!check.note.empty()) std::printf("  [%s]", check.note.c_str());
    std::printf("\n");
    for (const std::string& f : check.failures) std::printf("        %s\n", f.c_str());
    failed += !check.ok();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
