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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sdpsieve/errors.h"
#include "sdpsieve/gen.h"
#include "sdpsieve/io.h"
#include "sdpsieve/metrics.h"
#include "sdpsieve/recovery.h"
#include "sdpsieve/sieve.h"

namespace sdpsieve::cli {
namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) {
    throw InputError("cannot write '" + path + "'");
  }
}

std::string g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Emits "key: value" or "key=value" lines depending on the format.
class Report {
 public:
  Report(std::ostream& out, bool kv) : out_(out), kv_(kv) {}
  void put(const std::string& key, const std::string& value) {
    out_ << key << (kv_ ? "=" : ": ") << value << "\n";
  }
  void put(const std::string& key, double value) { put(key, g6(value)); }
  void put(const std::string& key, long long value) {
    put(key, std::to_string(value));
  }
  bool kv() const { return kv_; }

 private:
  std::ostream& out_;
  bool kv_;
};

std::string optional_percent(const std::optional<double>& fraction) {
  return fraction ? g6(*fraction * 100.0) + "%" : std::string("n/a");
}

struct CommonSieveFlags {
  bool safe_mode = true;
  std::optional<double> eps;

  void attach(CLI::App* app) {
    app->add_flag("--safe-mode,!--no-safe-mode", safe_mode,
                  "Two-tier tolerances scaled by max(|b|_inf, 1) (default on)");
    app->add_option("--eps", eps, "Machine-precision parameter (default 2^-52)")
        ->check(CLI::PositiveNumber);
  }
  SieveOptions options() const {
    SieveOptions o;
    o.safe_mode = safe_mode;
    if (eps) o.eps = *eps;
    return o;
  }
};

struct ReduceArgs {
  std::string input;
  std::string out;
  std::string cert;
  CommonSieveFlags sieve;
  std::optional<int> max_iter;
  bool stats = false;
  std::string format = "human";
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  const SdpProblem problem = read_sdpa(read_text(a.input));
  SieveOptions options = a.sieve.options();
  options.max_iterations = a.max_iter;
  Report report(out, a.format == "kv");

  SieveOutcome outcome;
  try {
    outcome = sieve(problem, options);
  } catch (const IterationLimitError& e) {
    if (!a.cert.empty()) write_text(a.cert, write_certificate(e.partial()));
    err << "sdpsieve: iteration limit reached after "
        << e.partial().steps.size() << " step(s)\n";
    report.put("verdict", "iteration_limit");
    report.put("steps", static_cast<long long>(e.partial().steps.size()));
    return kExitIterationLimit;
  }
  if (!a.cert.empty()) {
    write_text(a.cert, write_certificate(outcome.certificate));
  }
  const bool infeasible = outcome.verdict == SieveVerdict::kInfeasible;
  if (!infeasible && !a.out.empty()) {
    write_text(a.out, write_sdpa(*outcome.reduced));
  }
  report.put("verdict", infeasible ? "infeasible" : "reduced");
  report.put("steps", static_cast<long long>(outcome.certificate.steps.size()));
  if (infeasible) {
    const ReductionStep& last = outcome.certificate.steps.back();
    report.put("infeasible_constraint", static_cast<long long>(last.constraint));
  }
  if (a.stats) {
    const SdpProblem& after = infeasible ? problem : *outcome.reduced;
    const ReductionRates r = reduction_stats(problem, after);
    auto row = [&](const std::string& key, long long before, long long aft,
                   const std::optional<double>& frac) {
      if (report.kv()) {
        report.put(key + "_before", before);
        if (!infeasible) {
          report.put(key + "_after", aft);
          report.put(key + "_reduction",
                     frac ? g6(*frac) : std::string("n/a"));
        }
      } else if (infeasible) {
        report.put(key, before);
      } else {
        report.put(key, std::to_string(before) + " -> " + std::to_string(aft) +
                            " (reduction " + optional_percent(frac) + ")");
      }
    };
    row("n", r.n_before, r.n_after, r.n_reduction);
    row("m", r.m_before, r.m_after, r.m_reduction);
    row("nnz", static_cast<long long>(r.nnz_before),
        static_cast<long long>(r.nnz_after), r.nnz_reduction);
    report.put("iterations", static_cast<long long>(outcome.iteration_count));
    report.put("passes", static_cast<long long>(outcome.stats.passes));
  }
  return infeasible ? kExitInfeasible : kExitOk;
}

struct DimacsArgs {
  std::string problem;
  std::string solution;
  std::string format = "human";
};

int cmd_dimacs(const DimacsArgs& a, std::ostream& out) {
  const SdpProblem problem = read_sdpa(read_text(a.problem));
  const Solution solution = read_solution(read_text(a.solution), problem);
  const DimacsErrors e = dimacs_errors(problem, solution);
  Report report(out, a.format == "kv");
  report.put("err1", e.err1);
  report.put("err2", e.err2);
  report.put("err3", e.err3);
  report.put("err4", e.err4);
  report.put("err5", e.err5);
  report.put("err6", e.err6);
  report.put("max_abs", e.max_abs());
  return kExitOk;
}

struct RecoverArgs {
  std::string problem;
  std::string cert;
  std::string y_reduced;
  std::string out;
  double shift = 1e-6;
  CommonSieveFlags sieve;
  std::string format = "human";
};

int cmd_recover(const RecoverArgs& a, std::ostream& out, std::ostream& err) {
  const SdpProblem problem = read_sdpa(read_text(a.problem));
  const Certificate cert = read_certificate(read_text(a.cert));
  const auto problems = verify_certificate(problem, cert, a.sieve.options());
  if (!problems.empty()) {
    for (const auto& p : problems) err << "sdpsieve: certificate: " << p << "\n";
    return kExitInputError;
  }
  if (cert.proves_infeasibility()) {
    err << "sdpsieve: the certificate proves infeasibility; nothing to "
           "recover\n";
    return kExitInputError;
  }
  SdpProblem shell;
  shell.structure = cert.index_maps.reduced_structure;
  shell.constraints.resize(cert.index_maps.constraint_origin.size());
  const Solution reduced = read_solution(read_text(a.y_reduced), shell);

  RecoveryOptions options;
  options.shift = a.shift;
  const RecoveryResult result =
      basic_recovery(problem, cert, reduced.y, options);
  Report report(out, a.format == "kv");
  if (!result.recovered) {
    const int step = *result.failed_step;
    report.put("verdict", "failed");
    report.put("failed_step", static_cast<long long>(step));
    report.put("failed_constraint",
               static_cast<long long>(cert.steps[step].constraint));
    return kExitRecoveryFailed;
  }
  Solution full;
  full.y = result.y;
  if (!reduced.x.empty()) full.x = pad_primal(reduced.x, cert);
  const std::string text = write_solution(full, problem.structure);
  if (a.out.empty()) {
    out << text;
  } else {
    write_text(a.out, text);
    report.put("verdict", "recovered");
  }
  return kExitOk;
}

struct HelpcodeArgs {
  std::string before;
  std::string after;
  std::string format = "human";
};

int cmd_helpcode(const HelpcodeArgs& a, std::ostream& out, std::ostream& err) {
  const AfterReport before = read_solve_report(read_text(a.before));
  if (!std::holds_alternative<SolveReport>(before)) {
    err << "sdpsieve: the 'before' report cannot be sieve_infeasible\n";
    return kExitInputError;
  }
  const AfterReport after = read_solve_report(read_text(a.after));
  const std::string codes =
      help_code_string(help_code(std::get<SolveReport>(before), after));
  Report report(out, a.format == "kv");
  report.put("help_code", codes.empty() && !report.kv() ? "none" : codes);
  return kExitOk;
}

struct GenArgs {
  std::string family;
  std::uint64_t seed = 0;
  std::string out;
  int n = 10;
  int m = 10;
  int k = 2;
  std::vector<int> blocks;
  std::vector<int> sizes;
  int max_support = 3;
  int density = 6;
  bool chained = false;
  bool infeasible = false;
  std::string record;
  std::string base;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  std::string text;
  if (a.family == "example1") {
    text = write_sdpa(gen_example1());
  } else if (a.family == "posgap") {
    text = write_sdpa(gen_posgap());
  } else if (a.family == "planted") {
    PlantedOptions o;
    o.seed = a.seed;
    o.blocks = a.blocks.empty() ? std::vector<int>{a.n} : a.blocks;
    o.m = a.m;
    o.k = a.k;
    o.max_support = a.max_support;
    o.support_sizes = a.sizes;
    o.chained = a.chained;
    o.infeasible = a.infeasible;
    o.filler_density = a.density;
    const PlantedInstance inst = gen_planted(o);
    text = write_sdpa(inst.problem);
    if (!a.record.empty()) write_text(a.record, write_plant_record(inst.record));
  } else {
    const SdpProblem base =
        a.base.empty() ? gen_example1() : read_sdpa(read_text(a.base));
    text = write_sdpa(gen_messy(base, a.seed).problem);
  }
  if (a.out.empty()) {
    out << text;
  } else {
    write_text(a.out, text);
  }
  return kExitOk;
}

void add_format(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"human", "kv"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Facial-reduction presolver for semidefinite programs"};
  app.name("sdpsieve");
  app.require_subcommand(1);
  std::function<int()> action;

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "Sieve a problem file");
  r->add_option("input", reduce.input, "Problem (SDPA sparse)")->required();
  r->add_option("--out", reduce.out, "Write the reduced problem here");
  r->add_option("--cert", reduce.cert, "Write the certificate here");
  reduce.sieve.attach(r);
  r->add_option("--max-iter", reduce.max_iter, "Iteration cap")
      ->check(CLI::NonNegativeNumber);
  r->add_flag("--stats", reduce.stats, "Print size statistics");
  add_format(r, reduce.format);
  r->callback([&] { action = [&] { return cmd_reduce(reduce, out, err); }; });

  DimacsArgs dimacs;
  auto* d = app.add_subcommand("dimacs", "Score a solution by DIMACS errors");
  d->add_option("problem", dimacs.problem, "Problem (SDPA sparse)")->required();
  d->add_option("solution", dimacs.solution, "Solution file")->required();
  add_format(d, dimacs.format);
  d->callback([&] { action = [&] { return cmd_dimacs(dimacs, out); }; });

  RecoverArgs recover;
  auto* rc = app.add_subcommand("recover", "Extend a reduced dual solution");
  rc->add_option("problem", recover.problem, "Original problem")->required();
  rc->add_option("cert", recover.cert, "Certificate of the reduction")
      ->required();
  rc->add_option("solution", recover.y_reduced,
                 "Solution of the reduced problem")
      ->required();
  rc->add_option("--out", recover.out, "Write the full solution here");
  rc->add_option("--shift", recover.shift, "Slack shift (default 1e-6)")
      ->check(CLI::PositiveNumber);
  recover.sieve.attach(rc);
  add_format(rc, recover.format);
  rc->callback([&] { action = [&] { return cmd_recover(recover, out, err); }; });

  HelpcodeArgs helpcode;
  auto* h = app.add_subcommand("helpcode", "Compare two solve reports");
  h->add_option("before", helpcode.before, "Report without preprocessing")
      ->required();
  h->add_option("after", helpcode.after, "Report with preprocessing")
      ->required();
  add_format(h, helpcode.format);
  h->callback([&] { action = [&] { return cmd_helpcode(helpcode, out, err); }; });

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("family", gen.family, "example1 | posgap | planted | messy")
      ->required()
      ->check(CLI::IsMember({"example1", "posgap", "planted", "messy"}));
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--out", gen.out, "Output file (default stdout)");
  g->add_option("--n", gen.n, "Order of the single PSD block (planted)");
  g->add_option("--m", gen.m, "Number of constraints (planted)");
  g->add_option("--k", gen.k, "Number of planted constraints");
  g->add_option("--blocks", gen.blocks, "PSD block orders (planted)")
      ->delimiter(',');
  g->add_option("--sizes", gen.sizes, "Explicit support sizes (planted)")
      ->delimiter(',');
  g->add_option("--max-support", gen.max_support, "Largest support (planted)");
  g->add_option("--density", gen.density, "Filler entries (planted)");
  g->add_flag("--chained", gen.chained, "Chain the plants");
  g->add_flag("--infeasible", gen.infeasible, "Last plant proves infeasibility");
  g->add_option("--record", gen.record, "Write the plant record here");
  g->add_option("--base", gen.base, "Problem to obscure (messy)");
  g->callback([&] { action = [&] { return cmd_gen(gen, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "sdpsieve: parse error: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "sdpsieve: input error: " << e.what() << "\n";
  } catch (const UnsupportedError& e) {
    err << "sdpsieve: unsupported: " << e.what() << "\n";
  } catch (const NumericalError& e) {
    err << "sdpsieve: numerical failure: " << e.what() << "\n";
    return 1;
  }
  return kExitInputError;
}

}  // namespace sdpsieve::cli
