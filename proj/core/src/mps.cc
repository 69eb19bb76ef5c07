// Copyright 2026 The Balans Authors
//
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

#include "balans/mps.h"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "balans/error.h"

namespace balans {
namespace {

enum class Section {
  kNone,
  kName,
  kObjSense,
  kRows,
  kColumns,
  kRhs,
  kRanges,
  kBounds,
  kEnd
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

double parse_number(std::string_view token, int line) {
  std::string s(token);
  if (s == "Inf" || s == "inf" || s == "+Inf" || s == "+inf" ||
      s == "Infinity" || s == "+Infinity" || s == "1e+30" || s == "1e30") {
    return kInfinity;
  }
  if (s == "-Inf" || s == "-inf" || s == "-Infinity" || s == "-1e+30" ||
      s == "-1e30") {
    return -kInfinity;
  }
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE || std::isnan(value)) {
    throw ParseError("malformed number '" + s + "'", line);
  }
  return value;
}

std::string format_number(double v) {
  if (v == kInfinity) return "Inf";
  if (v == -kInfinity) return "-Inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

struct RowDecl {
  std::string name;
  char type;  // 'L', 'G', 'E'
  std::vector<Term> terms;
  double rhs = 0.0;
  std::optional<double> range;
};

struct ColumnDecl {
  std::string name;
  bool integer = false;
  std::optional<double> lower;
  std::optional<double> upper;
  bool binary_bound = false;
  double cost = 0.0;
};

class MpsReader {
 public:
  MipInstance read(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      std::string_view line = text.substr(pos, nl - pos);
      pos = nl + 1;
      ++line_no;
      handle_line(line, line_no);
      if (section_ == Section::kEnd) break;
      if (nl == text.size()) break;
    }
    if (section_ != Section::kEnd) {
      throw ParseError("missing ENDATA", line_no);
    }
    return build(line_no);
  }

 private:
  void handle_line(std::string_view line, int line_no) {
    if (line.empty() || line[0] == '*') return;
    const auto fields = split_fields(line);
    if (fields.empty()) return;
    const bool header = line[0] != ' ' && line[0] != '\t';
    if (header) {
      start_section(fields, line_no);
      return;
    }
    switch (section_) {
      case Section::kNone:
      case Section::kName:
        throw ParseError("data line outside of a section", line_no);
      case Section::kObjSense:
        read_objsense(fields[0], line_no);
        break;
      case Section::kRows:
        read_row(fields, line_no);
        break;
      case Section::kColumns:
        read_column(fields, line_no);
        break;
      case Section::kRhs:
        read_rhs(fields, line_no);
        break;
      case Section::kRanges:
        read_range(fields, line_no);
        break;
      case Section::kBounds:
        read_bound(fields, line_no);
        break;
      case Section::kEnd:
        break;
    }
  }

  void start_section(const std::vector<std::string_view>& fields,
                     int line_no) {
    const std::string_view key = fields[0];
    if (key == "NAME") {
      name_ = fields.size() > 1 ? std::string(fields[1]) : "";
      section_ = Section::kName;
    } else if (key == "OBJSENSE") {
      section_ = Section::kObjSense;
      if (fields.size() > 1) read_objsense(fields[1], line_no);
    } else if (key == "ROWS") {
      section_ = Section::kRows;
    } else if (key == "COLUMNS") {
      section_ = Section::kColumns;
    } else if (key == "RHS") {
      section_ = Section::kRhs;
    } else if (key == "RANGES") {
      section_ = Section::kRanges;
    } else if (key == "BOUNDS") {
      section_ = Section::kBounds;
    } else if (key == "ENDATA") {
      section_ = Section::kEnd;
    } else {
      throw ParseError("unknown section '" + std::string(key) + "'", line_no);
    }
  }

  void read_objsense(std::string_view word, int line_no) {
    if (word == "MAX" || word == "MAXIMIZE") {
      maximize_ = true;
    } else if (word == "MIN" || word == "MINIMIZE") {
      maximize_ = false;
    } else {
      throw ParseError("unknown OBJSENSE '" + std::string(word) + "'",
                       line_no);
    }
  }

  void read_row(const std::vector<std::string_view>& f, int line_no) {
    if (f.size() < 2) throw ParseError("ROWS entry needs type and name", line_no);
    const std::string name(f[1]);
    if (row_index_.contains(name) || free_rows_.contains(name) ||
        name == objective_name_) {
      throw ParseError("duplicate row name '" + name + "'", line_no);
    }
    const std::string_view type = f[0];
    if (type == "N") {
      if (objective_name_.empty()) {
        objective_name_ = name;
      } else {
        free_rows_.emplace(name);
      }
      return;
    }
    if (type != "L" && type != "G" && type != "E") {
      throw ParseError("unknown row type '" + std::string(type) + "'",
                       line_no);
    }
    row_index_.emplace(name, static_cast<int>(rows_.size()));
    rows_.push_back({name, type[0], {}, 0.0, std::nullopt});
  }

  void read_column(const std::vector<std::string_view>& f, int line_no) {
    if (f.size() >= 3 && f[1] == "'MARKER'") {
      if (f[2] == "'INTORG'") {
        in_integer_block_ = true;
      } else if (f[2] == "'INTEND'") {
        in_integer_block_ = false;
      } else {
        throw ParseError("unknown MARKER '" + std::string(f[2]) + "'",
                         line_no);
      }
      return;
    }
    if (f.size() != 3 && f.size() != 5) {
      throw ParseError("COLUMNS entry needs 3 or 5 fields", line_no);
    }
    const std::string col(f[0]);
    int j;
    auto it = column_index_.find(col);
    if (it == column_index_.end()) {
      j = static_cast<int>(columns_.size());
      column_index_.emplace(col, j);
      columns_.push_back({col, in_integer_block_, {}, {}, false, 0.0});
    } else {
      j = it->second;
    }
    for (std::size_t k = 1; k + 1 < f.size(); k += 2) {
      const std::string row(f[k]);
      const double value = parse_number(f[k + 1], line_no);
      if (row == objective_name_) {
        columns_[j].cost += value;
      } else if (auto r = row_index_.find(row); r != row_index_.end()) {
        rows_[r->second].terms.push_back({j, value});
      } else if (!free_rows_.contains(row)) {
        throw ParseError("COLUMNS entry references undeclared row '" + row +
                             "'",
                         line_no);
      }
    }
  }

  void read_rhs(const std::vector<std::string_view>& f, int line_no) {
    // The set name is optional in free format: "RHS row value" or
    // "row value".
    std::size_t start = (f.size() % 2 == 1) ? 1 : 0;
    if (f.size() < 2) throw ParseError("RHS entry needs row and value", line_no);
    for (std::size_t k = start; k + 1 < f.size(); k += 2) {
      const std::string row(f[k]);
      const double value = parse_number(f[k + 1], line_no);
      if (row == objective_name_) {
        // MPS stores -constant on the objective row.
        objective_constant_ = -value;
      } else if (auto r = row_index_.find(row); r != row_index_.end()) {
        rows_[r->second].rhs = value;
      } else if (!free_rows_.contains(row)) {
        throw ParseError("RHS entry references undeclared row '" + row + "'",
                         line_no);
      }
    }
  }

  void read_range(const std::vector<std::string_view>& f, int line_no) {
    std::size_t start = (f.size() % 2 == 1) ? 1 : 0;
    if (f.size() < 2) {
      throw ParseError("RANGES entry needs row and value", line_no);
    }
    for (std::size_t k = start; k + 1 < f.size(); k += 2) {
      const std::string row(f[k]);
      auto r = row_index_.find(row);
      if (r == row_index_.end()) {
        throw ParseError("RANGES entry references undeclared row '" + row +
                             "'",
                         line_no);
      }
      rows_[r->second].range = parse_number(f[k + 1], line_no);
    }
  }

  void read_bound(const std::vector<std::string_view>& f, int line_no) {
    if (f.size() < 2) throw ParseError("BOUNDS entry too short", line_no);
    const std::string type(f[0]);
    const bool needs_value = type == "UP" || type == "LO" || type == "FX" ||
                             type == "LI" || type == "UI";
    // Forms: "TYPE SET COL [VALUE]" or "TYPE COL [VALUE]".
    std::string col;
    std::optional<double> value;
    if (needs_value) {
      if (f.size() == 4) {
        col = std::string(f[2]);
        value = parse_number(f[3], line_no);
      } else if (f.size() == 3) {
        col = std::string(f[1]);
        value = parse_number(f[2], line_no);
      } else {
        throw ParseError("malformed " + type + " bound", line_no);
      }
    } else {
      if (f.size() == 3) {
        col = std::string(f[2]);
      } else if (f.size() == 2) {
        col = std::string(f[1]);
      } else if (f.size() == 4 && type == "BV") {
        col = std::string(f[2]);
      } else {
        throw ParseError("malformed " + type + " bound", line_no);
      }
    }
    auto it = column_index_.find(col);
    if (it == column_index_.end()) {
      throw ParseError("BOUNDS entry references unknown column '" + col + "'",
                       line_no);
    }
    ColumnDecl& c = columns_[it->second];
    if (type == "UP" || type == "UI") {
      c.upper = *value;
      if (type == "UI") c.integer = true;
      // A negative upper bound with no lower bound makes the lower -inf
      // (the common reading of the MPS convention).
      if (*value < 0.0 && !c.lower) c.lower = -kInfinity;
    } else if (type == "LO" || type == "LI") {
      c.lower = *value;
      if (type == "LI") c.integer = true;
    } else if (type == "FX") {
      c.lower = *value;
      c.upper = *value;
    } else if (type == "FR") {
      c.lower = -kInfinity;
      c.upper = kInfinity;
    } else if (type == "MI") {
      c.lower = -kInfinity;
    } else if (type == "PL") {
      c.upper = kInfinity;
    } else if (type == "BV") {
      c.integer = true;
      c.binary_bound = true;
      c.lower = 0.0;
      c.upper = 1.0;
    } else {
      throw ParseError("unknown bound type '" + type + "'", line_no);
    }
  }

  MipInstance build(int line_no) {
    if (objective_name_.empty() && rows_.empty() && columns_.empty()) {
      throw ParseError("no ROWS declared", line_no);
    }
    std::vector<Variable> vars;
    std::vector<double> cost;
    vars.reserve(columns_.size());
    for (const ColumnDecl& c : columns_) {
      Variable v;
      v.name = c.name;
      v.lower = c.lower.value_or(0.0);
      v.upper = c.upper.value_or(kInfinity);
      if (c.integer) {
        const bool zero_one = v.lower == 0.0 && v.upper == 1.0;
        v.kind = (c.binary_bound || zero_one) ? VarKind::kBinary
                                              : VarKind::kInteger;
      }
      vars.push_back(std::move(v));
      cost.push_back(maximize_ ? -c.cost : c.cost);
    }
    std::vector<LinearConstraint> rows;
    for (RowDecl& r : rows_) {
      if (r.terms.empty()) {
        // An empty row constrains 0 against its rhs; keep the model valid
        // by dropping it when satisfied.
        const bool ok = (r.type == 'L' && r.rhs >= 0.0) ||
                        (r.type == 'G' && r.rhs <= 0.0) ||
                        (r.type == 'E' && r.rhs == 0.0);
        if (!ok) {
          throw ParseError("row '" + r.name + "' is empty and infeasible", 0);
        }
        continue;
      }
      if (!r.range) {
        const Relation rel = r.type == 'L'   ? Relation::kLessEqual
                             : r.type == 'G' ? Relation::kGreaterEqual
                                             : Relation::kEqual;
        rows.push_back({r.name, std::move(r.terms), rel, r.rhs});
        continue;
      }
      const double range = *r.range;
      double lo, up;
      if (r.type == 'L') {
        lo = r.rhs - std::abs(range);
        up = r.rhs;
      } else if (r.type == 'G') {
        lo = r.rhs;
        up = r.rhs + std::abs(range);
      } else if (range >= 0.0) {
        lo = r.rhs;
        up = r.rhs + range;
      } else {
        lo = r.rhs + range;
        up = r.rhs;
      }
      rows.push_back({r.name + "_lo", r.terms, Relation::kGreaterEqual, lo});
      rows.push_back({r.name + "_up", std::move(r.terms), Relation::kLessEqual,
                      up});
    }
    try {
      return MipInstance(name_, std::move(vars), std::move(rows),
                         std::move(cost),
                         maximize_ ? -objective_constant_ : objective_constant_);
    } catch (const ModelError& e) {
      throw ParseError(e.what(), 0);
    }
  }

  Section section_ = Section::kNone;
  std::string name_;
  bool maximize_ = false;
  std::string objective_name_;
  std::unordered_map<std::string, int> row_index_;
  std::unordered_set<std::string> free_rows_;
  std::vector<RowDecl> rows_;
  std::unordered_map<std::string, int> column_index_;
  std::vector<ColumnDecl> columns_;
  bool in_integer_block_ = false;
  double objective_constant_ = 0.0;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

MipInstance parse_mps(std::string_view text) {
  return MpsReader().read(text);
}

MipInstance read_mps_file(const std::filesystem::path& path) {
  return parse_mps(read_file(path));
}

std::string write_mps(const MipInstance& instance) {
  std::string objective_row = "obj";
  for (bool clash = true; clash;) {
    clash = false;
    for (int i = 0; i < instance.num_constraints(); ++i) {
      if (instance.constraint(i).name == objective_row) {
        objective_row += '_';
        clash = true;
        break;
      }
    }
  }

  std::string out;
  out += "NAME " + (instance.name().empty() ? std::string("model")
                                            : instance.name()) +
         "\n";
  out += "ROWS\n N " + objective_row + "\n";
  for (int i = 0; i < instance.num_constraints(); ++i) {
    const LinearConstraint& r = instance.constraint(i);
    const char type = r.relation == Relation::kLessEqual      ? 'L'
                      : r.relation == Relation::kGreaterEqual ? 'G'
                                                              : 'E';
    out += ' ';
    out += type;
    out += ' ' + r.name + '\n';
  }

  // Column-major view of the rows.
  std::vector<std::vector<std::pair<int, double>>> by_column(
      instance.num_vars());
  for (int i = 0; i < instance.num_constraints(); ++i) {
    for (const Term& t : instance.constraint(i).coeffs) {
      by_column[t.index].push_back({i, t.coef});
    }
  }

  out += "COLUMNS\n";
  bool in_block = false;
  int marker = 0;
  for (int j = 0; j < instance.num_vars(); ++j) {
    const Variable& v = instance.variable(j);
    if (v.is_discrete() != in_block) {
      out += in_block ? "    MARKER" + std::to_string(marker++) +
                            " 'MARKER' 'INTEND'\n"
                      : "    MARKER" + std::to_string(marker++) +
                            " 'MARKER' 'INTORG'\n";
      in_block = v.is_discrete();
    }
    const double c = instance.objective()[j];
    bool wrote = false;
    if (c != 0.0) {
      out += "    " + v.name + ' ' + objective_row + ' ' + format_number(c) +
             '\n';
      wrote = true;
    }
    for (const auto& [i, coef] : by_column[j]) {
      out += "    " + v.name + ' ' + instance.constraint(i).name + ' ' +
             format_number(coef) + '\n';
      wrote = true;
    }
    if (!wrote) out += "    " + v.name + ' ' + objective_row + " 0\n";
  }
  if (in_block) {
    out += "    MARKER" + std::to_string(marker++) + " 'MARKER' 'INTEND'\n";
  }

  out += "RHS\n";
  if (instance.objective_constant() != 0.0) {
    out += "    RHS " + objective_row + ' ' +
           format_number(-instance.objective_constant()) + '\n';
  }
  for (int i = 0; i < instance.num_constraints(); ++i) {
    const LinearConstraint& r = instance.constraint(i);
    if (r.rhs != 0.0) {
      out += "    RHS " + r.name + ' ' + format_number(r.rhs) + '\n';
    }
  }

  out += "BOUNDS\n";
  for (int j = 0; j < instance.num_vars(); ++j) {
    const Variable& v = instance.variable(j);
    if (v.kind == VarKind::kBinary && v.lower == 0.0 && v.upper == 1.0) {
      out += " BV BND " + v.name + '\n';
      continue;
    }
    if (v.lower == v.upper) {
      out += " FX BND " + v.name + ' ' + format_number(v.lower) + '\n';
      continue;
    }
    if (v.lower == -kInfinity && v.upper == kInfinity) {
      out += " FR BND " + v.name + '\n';
      continue;
    }
    if (v.lower == -kInfinity) {
      out += " MI BND " + v.name + '\n';
    } else if (v.lower != 0.0) {
      out += " LO BND " + v.name + ' ' + format_number(v.lower) + '\n';
    }
    if (v.upper != kInfinity) {
      out += " UP BND " + v.name + ' ' + format_number(v.upper) + '\n';
    }
  }
  out += "ENDATA\n";
  return out;
}

void write_mps_file(const MipInstance& instance,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << write_mps(instance);
}

SolutionFile parse_solution_file(std::string_view text) {
  SolutionFile file;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields[0].starts_with('#')) {
      // "# status optimal" or "#status optimal"
      std::vector<std::string_view> rest = fields;
      if (rest[0] == "#") {
        rest.erase(rest.begin());
      } else {
        rest[0].remove_prefix(1);
      }
      if (rest.size() >= 2 && rest[0] == "status") {
        file.status = std::string(rest[1]);
      }
      continue;
    }
    if (fields[0] == "objective" || fields[0] == "Objective" ||
        fields[0] == "obj") {
      if (fields.size() < 2) {
        throw ParseError("objective line without a value", line_no);
      }
      // Some writers emit "objective value: -8".
      std::string_view token = fields.back();
      file.objective = parse_number(token, line_no);
      continue;
    }
    if (fields.size() < 2) {
      throw ParseError("expected 'name value'", line_no);
    }
    file.values[std::string(fields[0])] = parse_number(fields[1], line_no);
  }
  return file;
}

SolutionFile read_solution_file(const std::filesystem::path& path) {
  return parse_solution_file(read_file(path));
}

std::string write_solution_file(const MipInstance& instance,
                                std::span<const double> values,
                                std::optional<double> objective,
                                std::string_view status) {
  if (static_cast<int>(values.size()) != instance.num_vars()) {
    throw DimensionError("solution length does not match the instance");
  }
  std::string out;
  if (!status.empty()) out += "# status " + std::string(status) + '\n';
  if (objective) out += "objective " + format_number(*objective) + '\n';
  for (int j = 0; j < instance.num_vars(); ++j) {
    out += instance.variable(j).name + ' ' + format_number(values[j]) + '\n';
  }
  return out;
}

std::vector<double> to_dense(const SolutionFile& file,
                             const MipInstance& instance) {
  std::vector<double> dense(instance.num_vars(), 0.0);
  std::unordered_map<std::string, int> index;
  for (int j = 0; j < instance.num_vars(); ++j) {
    index.emplace(instance.variable(j).name, j);
  }
  for (const auto& [name, value] : file.values) {
    auto it = index.find(name);
    if (it == index.end()) {
      throw ParseError("solution names unknown variable '" + name + "'", 0);
    }
    dense[it->second] = value;
  }
  return dense;
}

}  // namespace balans
