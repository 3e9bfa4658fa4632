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

#include "sdpsieve/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "sdpsieve/errors.h"

namespace sdpsieve {
namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({++number, std::string(line)});
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::string strip_punctuation(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '{' || c == '}' || c == '(' || c == ')') c = ' ';
  }
  return s;
}

bool parse_int(std::string_view s, long long& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

int to_int(const std::string& s, int line, const char* what) {
  long long v = 0;
  if (!parse_int(s, v) || v < -2147483647LL || v > 2147483647LL) {
    throw ParseError(std::string("expected integer ") + what + ", got '" + s +
                         "'",
                     line);
  }
  return static_cast<int>(v);
}

double to_double(const std::string& s, int line, const char* what) {
  double v = 0;
  if (!parse_double(s, v)) {
    throw ParseError(std::string("expected finite number ") + what +
                         ", got '" + s + "'",
                     line);
  }
  return v;
}

// Cursor over the lines of a document.
class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(split_lines(text)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  const Line& next() { return lines_[pos_++]; }
  void skip_blank() {
    while (!done() && blank(peek().text)) ++pos_;
  }
  int last_line() const {
    return lines_.empty() ? 0 : lines_.back().number;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

// Reads `count` numeric tokens starting at the next line, spanning lines if
// needed. With count == 0 a single blank line is consumed if present.
std::vector<std::string> header_tokens(Reader& r, int count, const char* what) {
  std::vector<std::string> out;
  if (count == 0) {
    if (!r.done() && blank(r.peek().text)) r.next();
    return out;
  }
  while (static_cast<int>(out.size()) < count) {
    r.skip_blank();
    if (r.done()) {
      throw ParseError(std::string("unexpected end of input while reading ") +
                           what,
                       r.last_line());
    }
    const Line& line = r.next();
    for (auto& t : tokens(strip_punctuation(line.text))) {
      if (static_cast<int>(out.size()) < count) out.push_back(std::move(t));
    }
  }
  return out;
}

std::string format_coordinate(const Coordinate& c) {
  return std::to_string(c.block) + ":" + std::to_string(c.row);
}

Coordinate parse_coordinate(const std::string& s, int line) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    throw ParseError("malformed coordinate '" + s + "'", line);
  }
  Coordinate c;
  c.block = to_int(s.substr(0, colon), line, "block");
  c.row = to_int(s.substr(colon + 1), line, "row");
  if (c.block < 0 || c.row < 0) {
    throw ParseError("negative coordinate '" + s + "'", line);
  }
  return c;
}

// Canonical 1-based (blkno, i, j) numbering shared by the SDPA writer and
// solution files.
struct CanonicalBlocks {
  explicit CanonicalBlocks(const BlockStructure& s) : structure(s) {}

  int psd() const { return static_cast<int>(structure.psd_blocks.size()); }
  int count() const { return psd() + (structure.nonneg_count > 0 ? 1 : 0); }

  std::tuple<int, int, int> to_file(const MatrixEntry& e) const {
    if (e.block < psd()) return {e.block + 1, e.i + 1, e.j + 1};
    const int t = e.block - psd();
    return {psd() + 1, t + 1, t + 1};
  }

  MatrixEntry from_file(int blk, int i, int j, double v, int line) const {
    if (blk < 1 || blk > count()) {
      throw ParseError("block number " + std::to_string(blk) + " out of range",
                       line);
    }
    if (i > j) throw ParseError("entry below the diagonal (i > j)", line);
    if (blk <= psd()) {
      const int order = structure.psd_blocks[blk - 1];
      if (i < 1 || j > order) {
        throw ParseError("index out of block range", line);
      }
      return {blk - 1, i - 1, j - 1, v};
    }
    if (i < 1 || j > structure.nonneg_count) {
      throw ParseError("index out of block range", line);
    }
    if (i != j) throw ParseError("off-diagonal entry in a diagonal block", line);
    return {psd() + i - 1, 0, 0, v};
  }

  const BlockStructure& structure;
};

std::string entry_line(const CanonicalBlocks& cb, const MatrixEntry& e) {
  const auto [blk, i, j] = cb.to_file(e);
  return std::to_string(blk) + " " + std::to_string(i) + " " +
         std::to_string(j) + " " + format_double(e.value) + "\n";
}

std::string join_doubles(const std::vector<double>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += format_double(v[k]);
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

SdpProblem read_sdpa(std::string_view text) {
  Reader r(text);
  while (!r.done()) {
    const std::string& t = r.peek().text;
    const auto first = t.find_first_not_of(" \t");
    if (first == std::string::npos || t[first] == '"' || t[first] == '*') {
      r.next();
    } else {
      break;
    }
  }

  const auto m_tok = header_tokens(r, 1, "the number of constraints");
  const int m_line = r.done() ? r.last_line() : r.peek().number - 1;
  const int m = to_int(m_tok[0], m_line, "mDIM");
  if (m < 0) throw ParseError("negative number of constraints", m_line);
  const auto nb_tok = header_tokens(r, 1, "the number of blocks");
  const int nb_line = r.done() ? r.last_line() : r.peek().number - 1;
  const int nblocks = to_int(nb_tok[0], nb_line, "nBLOCK");
  if (nblocks < 0) throw ParseError("negative number of blocks", nb_line);

  const auto size_tok = header_tokens(r, nblocks, "the block structure");
  const int size_line = r.done() ? r.last_line() : r.peek().number - 1;
  std::vector<int> file_sizes;
  for (const auto& t : size_tok) {
    const int sz = to_int(t, size_line, "block size");
    if (sz == 0) throw ParseError("block size 0", size_line);
    file_sizes.push_back(sz);
  }

  const auto b_tok = header_tokens(r, m, "the objective vector");
  const int b_line = r.done() ? r.last_line() : r.peek().number - 1;
  std::vector<double> rhs;
  for (const auto& t : b_tok) rhs.push_back(to_double(t, b_line, "in c"));

  SdpProblem p;
  // File block -> internal PSD block or first nonneg block.
  std::vector<int> base(nblocks);
  for (int b = 0; b < nblocks; ++b) {
    if (file_sizes[b] > 0) {
      base[b] = static_cast<int>(p.structure.psd_blocks.size());
      p.structure.psd_blocks.push_back(file_sizes[b]);
    }
  }
  const int psd = static_cast<int>(p.structure.psd_blocks.size());
  for (int b = 0; b < nblocks; ++b) {
    if (file_sizes[b] < 0) {
      base[b] = psd + p.structure.nonneg_count;
      p.structure.nonneg_count += -file_sizes[b];
    }
  }
  p.rhs = rhs;

  std::vector<std::vector<MatrixEntry>> mats(m + 1);
  std::set<std::tuple<int, int, int, int>> seen;
  while (!r.done()) {
    const Line& line = r.next();
    if (blank(line.text)) continue;
    const auto t = tokens(line.text);
    if (t.size() != 5) {
      throw ParseError("expected 'matno blkno i j value'", line.number);
    }
    const int matno = to_int(t[0], line.number, "matno");
    const int blk = to_int(t[1], line.number, "blkno");
    const int i = to_int(t[2], line.number, "i");
    const int j = to_int(t[3], line.number, "j");
    const double v = to_double(t[4], line.number, "value");
    if (matno < 0 || matno > m) {
      throw ParseError("matrix number out of range", line.number);
    }
    if (blk < 1 || blk > nblocks) {
      throw ParseError("block number out of range", line.number);
    }
    if (i > j) throw ParseError("entry below the diagonal (i > j)", line.number);
    const int sz = file_sizes[blk - 1];
    if (i < 1 || j > std::abs(sz)) {
      throw ParseError("index out of block range", line.number);
    }
    if (sz < 0 && i != j) {
      throw ParseError("off-diagonal entry in a diagonal block", line.number);
    }
    if (!seen.insert({matno, blk, i, j}).second) {
      throw ParseError("duplicate entry", line.number);
    }
    if (v == 0.0) continue;
    if (sz > 0) {
      mats[matno].push_back({base[blk - 1], i - 1, j - 1, v});
    } else {
      mats[matno].push_back({base[blk - 1] + i - 1, 0, 0, v});
    }
  }
  p.objective = SymBlockMatrix(std::move(mats[0]));
  for (int k = 1; k <= m; ++k) {
    p.constraints.push_back({SymBlockMatrix(std::move(mats[k])), {}});
  }
  return p;
}

std::string write_sdpa(const SdpProblem& problem) {
  if (problem.structure.free_count > 0) {
    throw UnsupportedError("SDPA sparse format cannot hold free variables");
  }
  const CanonicalBlocks cb(problem.structure);
  std::string out;
  out += std::to_string(problem.num_constraints()) + "\n";
  out += std::to_string(cb.count()) + "\n";
  std::string sizes;
  for (int order : problem.structure.psd_blocks) {
    if (!sizes.empty()) sizes += ' ';
    sizes += std::to_string(order);
  }
  if (problem.structure.nonneg_count > 0) {
    if (!sizes.empty()) sizes += ' ';
    sizes += std::to_string(-problem.structure.nonneg_count);
  }
  out += sizes + "\n";
  out += join_doubles(problem.rhs) + "\n";
  auto emit = [&](int matno, const SymBlockMatrix& m) {
    for (const MatrixEntry& e : m.entries()) {
      out += std::to_string(matno) + " " + entry_line(cb, e);
    }
  };
  emit(0, problem.objective);
  for (int i = 0; i < problem.num_constraints(); ++i) {
    emit(i + 1, problem.constraints[i].matrix);
  }
  return out;
}

Solution read_solution(std::string_view text, const SdpProblem& problem) {
  Reader r(text);
  r.skip_blank();
  if (r.done()) throw ParseError("empty solution file", 0);
  Solution sol;
  {
    const Line& line = r.next();
    const auto t = tokens(line.text);
    if (t.empty() || t[0] != "y") {
      throw ParseError("solution must start with a 'y' line", line.number);
    }
    for (std::size_t k = 1; k < t.size(); ++k) {
      sol.y.push_back(to_double(t[k], line.number, "in y"));
    }
    if (static_cast<int>(sol.y.size()) != problem.num_constraints()) {
      throw InputError("line " + std::to_string(line.number) + ": y has " +
                       std::to_string(sol.y.size()) + " entries, problem has " +
                       std::to_string(problem.num_constraints()) +
                       " constraints");
    }
  }
  r.skip_blank();
  if (!r.done()) {
    const auto t = tokens(r.peek().text);
    if (!t.empty() && t[0] == "xfree") {
      const Line& line = r.next();
      for (std::size_t k = 1; k < t.size(); ++k) {
        sol.x_free.push_back(to_double(t[k], line.number, "in xfree"));
      }
      if (static_cast<int>(sol.x_free.size()) !=
          problem.structure.free_count) {
        throw InputError("line " + std::to_string(line.number) +
                         ": xfree length does not match the problem");
      }
    }
  }

  const CanonicalBlocks cb(problem.structure);
  std::vector<MatrixEntry> x, z;
  std::vector<MatrixEntry>* target = &x;
  std::set<std::tuple<int, int, int>> seen;
  bool has_z = false;
  while (!r.done()) {
    const Line& line = r.next();
    if (blank(line.text)) continue;
    const auto t = tokens(line.text);
    if (t.size() == 1 && t[0] == "Z") {
      if (has_z) throw ParseError("repeated Z marker", line.number);
      has_z = true;
      target = &z;
      seen.clear();
      continue;
    }
    if (t.size() != 4) {
      throw ParseError("expected 'blkno i j value'", line.number);
    }
    const MatrixEntry e = cb.from_file(to_int(t[0], line.number, "blkno"),
                                       to_int(t[1], line.number, "i"),
                                       to_int(t[2], line.number, "j"),
                                       to_double(t[3], line.number, "value"),
                                       line.number);
    if (!seen.insert({e.block, e.i, e.j}).second) {
      throw ParseError("duplicate entry", line.number);
    }
    if (e.value != 0.0) target->push_back(e);
  }
  sol.x = SymBlockMatrix(std::move(x));
  if (has_z) sol.z = SymBlockMatrix(std::move(z));
  return sol;
}

std::string write_solution(const Solution& solution,
                           const BlockStructure& structure) {
  const CanonicalBlocks cb(structure);
  std::string out = "y";
  for (double v : solution.y) out += " " + format_double(v);
  out += "\n";
  if (!solution.x_free.empty()) {
    out += "xfree " + join_doubles(solution.x_free) + "\n";
  }
  for (const MatrixEntry& e : solution.x.entries()) out += entry_line(cb, e);
  if (solution.z) {
    out += "Z\n";
    for (const MatrixEntry& e : solution.z->entries()) out += entry_line(cb, e);
  }
  return out;
}

namespace {

std::string structure_lines(const std::string& prefix, const BlockStructure& s) {
  std::string out = prefix + "psd_blocks";
  for (int order : s.psd_blocks) out += " " + std::to_string(order);
  out += "\n";
  out += prefix + "nonneg " + std::to_string(s.nonneg_count) + "\n";
  out += prefix + "free " + std::to_string(s.free_count) + "\n";
  return out;
}

std::string coordinate_list(const std::vector<Coordinate>& cs) {
  std::string out;
  for (const Coordinate& c : cs) out += " " + format_coordinate(c);
  return out;
}

std::string int_list(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += " " + std::to_string(x);
  return out;
}

// Strict line-by-line reader for the certificate document.
class KeyedReader {
 public:
  explicit KeyedReader(std::string_view text) : r_(text) {}

  // Next non-blank line; its first token must equal `key`.
  std::vector<std::string> expect(const std::string& key) {
    r_.skip_blank();
    if (r_.done()) {
      throw ParseError("missing '" + key + "'", r_.last_line());
    }
    const Line& line = r_.next();
    line_ = line.number;
    auto t = tokens(line.text);
    if (t.empty() || t[0] != key) {
      throw ParseError("expected '" + key + "'", line.number);
    }
    t.erase(t.begin());
    return t;
  }
  int line() const { return line_; }
  bool at_end() {
    r_.skip_blank();
    return r_.done();
  }

 private:
  Reader r_;
  int line_ = 0;
};

int single_int(KeyedReader& kr, const std::string& key) {
  const auto t = kr.expect(key);
  if (t.size() != 1) throw ParseError("'" + key + "' takes one value", kr.line());
  return to_int(t[0], kr.line(), key.c_str());
}

BlockStructure read_structure(KeyedReader& kr, const std::string& prefix) {
  BlockStructure s;
  for (const auto& t : kr.expect(prefix + "psd_blocks")) {
    const int order = to_int(t, kr.line(), "block order");
    if (order < 1) throw ParseError("block order must be >= 1", kr.line());
    s.psd_blocks.push_back(order);
  }
  s.nonneg_count = single_int(kr, prefix + "nonneg");
  s.free_count = single_int(kr, prefix + "free");
  if (s.nonneg_count < 0 || s.free_count < 0) {
    throw ParseError("negative count", kr.line());
  }
  return s;
}

std::string value_of(const std::string& token, const std::string& key,
                     int line) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw ParseError("expected '" + prefix + "...'", line);
  }
  return token.substr(prefix.size());
}

void check_coordinate(const Coordinate& c, const BlockStructure& s, int line) {
  if (c.block >= s.num_blocks() || c.row >= s.block_order(c.block)) {
    throw ParseError("coordinate outside the block structure", line);
  }
}

}  // namespace

std::string write_certificate(const Certificate& c) {
  std::string out = "sdpsieve-certificate " +
                    std::to_string(kCertificateSchemaVersion) + "\n";
  out += structure_lines("", c.original_structure);
  out += "constraints " + std::to_string(c.original_num_constraints) + "\n";
  out += "steps " + std::to_string(c.steps.size()) + "\n";
  for (const ReductionStep& s : c.steps) {
    out += std::string("step kind=") + step_kind_name(s.kind) +
           " constraint=" + std::to_string(s.constraint) +
           " sign=" + std::to_string(s.sign) + " rhs=" + format_double(s.rhs) +
           " support" + coordinate_list(s.support) + "\n";
  }
  out += "deleted_coordinates" + coordinate_list(c.deleted_coordinates) + "\n";
  out += "deleted_constraints" + int_list(c.deleted_constraints) + "\n";
  out += structure_lines("reduced_", c.index_maps.reduced_structure);
  out += "coordinate_origin" + coordinate_list(c.index_maps.coordinate_origin) +
         "\n";
  out += "constraint_origin" + int_list(c.index_maps.constraint_origin) + "\n";
  out += "end\n";
  return out;
}

Certificate read_certificate(std::string_view text) {
  KeyedReader kr(text);
  {
    const auto t = kr.expect("sdpsieve-certificate");
    if (t.size() != 1) throw ParseError("malformed version line", kr.line());
    const int version = to_int(t[0], kr.line(), "schema version");
    if (version != kCertificateSchemaVersion) {
      throw ParseError("unsupported certificate schema version " +
                           std::to_string(version) + " (expected " +
                           std::to_string(kCertificateSchemaVersion) + ")",
                       kr.line());
    }
  }
  Certificate c;
  c.original_structure = read_structure(kr, "");
  c.original_num_constraints = single_int(kr, "constraints");
  if (c.original_num_constraints < 0) {
    throw ParseError("negative constraint count", kr.line());
  }
  const int nsteps = single_int(kr, "steps");
  if (nsteps < 0) throw ParseError("negative step count", kr.line());
  for (int k = 0; k < nsteps; ++k) {
    const auto t = kr.expect("step");
    const int line = kr.line();
    if (t.size() < 5) throw ParseError("truncated step", line);
    ReductionStep s;
    const std::string kind = value_of(t[0], "kind", line);
    if (kind == "reduce_psd") {
      s.kind = StepKind::kReducePsd;
    } else if (kind == "delete_zero") {
      s.kind = StepKind::kDeleteZeroConstraint;
    } else if (kind == "infeasible") {
      s.kind = StepKind::kInfeasible;
    } else {
      throw ParseError("unknown step kind '" + kind + "'", line);
    }
    s.constraint = to_int(value_of(t[1], "constraint", line), line, "constraint");
    if (s.constraint < 0 || s.constraint >= c.original_num_constraints) {
      throw ParseError("step constraint out of range", line);
    }
    s.sign = to_int(value_of(t[2], "sign", line), line, "sign");
    if (s.sign != 1 && s.sign != -1) throw ParseError("sign must be +-1", line);
    s.rhs = to_double(value_of(t[3], "rhs", line), line, "rhs");
    if (t[4] != "support") throw ParseError("expected 'support'", line);
    for (std::size_t q = 5; q < t.size(); ++q) {
      s.support.push_back(parse_coordinate(t[q], line));
      check_coordinate(s.support.back(), c.original_structure, line);
    }
    if (s.kind == StepKind::kReducePsd && s.support.empty()) {
      throw ParseError("reduce_psd step without support", line);
    }
    c.steps.push_back(std::move(s));
  }
  for (const auto& t : kr.expect("deleted_coordinates")) {
    c.deleted_coordinates.push_back(parse_coordinate(t, kr.line()));
    check_coordinate(c.deleted_coordinates.back(), c.original_structure,
                     kr.line());
  }
  for (const auto& t : kr.expect("deleted_constraints")) {
    c.deleted_constraints.push_back(to_int(t, kr.line(), "constraint"));
  }
  c.index_maps.reduced_structure = read_structure(kr, "reduced_");
  for (const auto& t : kr.expect("coordinate_origin")) {
    c.index_maps.coordinate_origin.push_back(parse_coordinate(t, kr.line()));
    check_coordinate(c.index_maps.coordinate_origin.back(),
                     c.original_structure, kr.line());
  }
  if (static_cast<int>(c.index_maps.coordinate_origin.size()) !=
      c.index_maps.reduced_structure.dimension()) {
    throw ParseError("coordinate_origin does not match the reduced structure",
                     kr.line());
  }
  for (const auto& t : kr.expect("constraint_origin")) {
    const int i = to_int(t, kr.line(), "constraint");
    if (i < 0 || i >= c.original_num_constraints) {
      throw ParseError("constraint_origin entry out of range", kr.line());
    }
    c.index_maps.constraint_origin.push_back(i);
  }
  if (!kr.expect("end").empty()) throw ParseError("junk after 'end'", kr.line());
  if (!kr.at_end()) throw ParseError("content after 'end'", kr.line() + 1);
  return c;
}

std::string write_plant_record(const PlantRecord& record) {
  std::string out = "plant-record 1\n";
  out += std::string("chained ") + (record.chained ? "1" : "0") + "\n";
  out += std::string("infeasible ") + (record.infeasible ? "1" : "0") + "\n";
  out += "plants " + std::to_string(record.constraints.size()) + "\n";
  for (std::size_t j = 0; j < record.constraints.size(); ++j) {
    out += "plant constraint=" + std::to_string(record.constraints[j]) +
           " sign=" + std::to_string(record.signs[j]) + " support" +
           coordinate_list(record.supports[j]) + "\n";
  }
  return out;
}

AfterReport read_solve_report(std::string_view text) {
  SolveReport report;
  bool sieve_infeasible = false;
  std::set<std::string> seen;
  for (const Line& line : split_lines(text)) {
    if (blank(line.text)) continue;
    const auto first = line.text.find_first_not_of(" \t");
    if (line.text[first] == '#') continue;
    const auto eq = line.text.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected key=value", line.number);
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.text.substr(0, eq));
    const std::string value = trim(line.text.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ParseError("duplicate key '" + key + "'", line.number);
    }
    auto flag = [&]() {
      if (value == "1" || value == "true") return true;
      if (value == "0" || value == "false") return false;
      throw ParseError("expected 0/1 for '" + key + "'", line.number);
    };
    if (key == "infeasible") {
      report.infeasible = flag();
    } else if (key == "out_of_memory") {
      report.out_of_memory = flag();
    } else if (key == "sieve_infeasible") {
      sieve_infeasible = flag();
    } else if (key == "primal_obj") {
      report.primal_obj = to_double(value, line.number, "primal_obj");
    } else if (key == "dual_obj") {
      report.dual_obj = to_double(value, line.number, "dual_obj");
    } else if (key == "dimacs") {
      report.dimacs_max_abs = std::abs(to_double(value, line.number, "dimacs"));
    } else {
      throw ParseError("unknown key '" + key + "'", line.number);
    }
  }
  if (sieve_infeasible) return SieveInfeasible{};
  return report;
}

std::string write_solve_report(const SolveReport& report) {
  std::string out;
  out += std::string("infeasible=") + (report.infeasible ? "1" : "0") + "\n";
  out += "primal_obj=" + format_double(report.primal_obj) + "\n";
  out += "dual_obj=" + format_double(report.dual_obj) + "\n";
  out += "dimacs=" + format_double(report.dimacs_max_abs) + "\n";
  out += std::string("out_of_memory=") + (report.out_of_memory ? "1" : "0") +
         "\n";
  return out;
}

}  // namespace sdpsieve
