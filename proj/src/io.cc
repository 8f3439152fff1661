// Copyright 2026 The mlcluster Authors.
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

#include "mlcluster/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>

namespace mlcluster {
namespace {

std::string Trim(const std::string& s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Splits one CSV record; double quotes group commas and "" escapes a quote.
std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  bool was_quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      cells.push_back(was_quoted ? cell : Trim(cell));
      cell.clear();
      was_quoted = false;
    } else {
      cell += c;
    }
  }
  if (quoted) throw ValidationError("unterminated quote in CSV line");
  cells.push_back(was_quoted ? cell : Trim(cell));
  return cells;
}

struct CsvRow {
  int line;
  std::vector<std::string> cells;
};

std::vector<CsvRow> ReadRows(std::istream& in) {
  std::vector<CsvRow> rows;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    rows.push_back({number, SplitCsvLine(line)});
  }
  return rows;
}

bool ParseDouble(const std::string& s, double* out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string FormatDouble(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string JoinLabels(Mask a, const Labels& labels, const char* sep) {
  std::string out;
  for (int i : Members(a)) {
    if (!out.empty()) out += sep;
    out += labels.at(i);
  }
  return out;
}

std::map<std::string, int> LabelIndex(const Labels& labels) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < labels.size(); ++i) {
    index.emplace(labels[i], static_cast<int>(i));
  }
  return index;
}

std::string LabelFromJson(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw ValidationError("label must be a string or an integer, got " +
                        j.dump());
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<std::string> SplitSubsetLabels(const std::string& cell) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : cell) {
    if (c == ';' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

Labels DefaultLabels(int n) {
  Labels labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

LabeledMatrix ReadMatrixCsv(std::istream& in) {
  std::vector<CsvRow> rows = ReadRows(in);
  if (rows.empty()) throw ValidationError("matrix CSV is empty");
  bool header = false;
  for (const std::string& c : rows[0].cells) {
    double unused;
    if (!ParseDouble(c, &unused)) header = true;
  }
  LabeledMatrix result;
  size_t first_data = 0;
  size_t label_cols = 0;
  if (header) {
    first_data = 1;
    const std::vector<std::string>& h = rows[0].cells;
    double unused;
    const bool row_labels =
        (!h.empty() && h[0].empty()) ||
        (rows.size() > 1 && !ParseDouble(rows[1].cells.at(0), &unused));
    if (row_labels) {
      label_cols = 1;
      const size_t data_width =
          rows.size() > 1 ? rows[1].cells.size() : h.size() + 1;
      if (h.size() == data_width) {
        result.labels.assign(h.begin() + 1, h.end());  // corner cell
      } else {
        result.labels = h;
      }
    } else {
      result.labels = h;
    }
    std::set<std::string> seen;
    for (const std::string& l : result.labels) {
      if (l.empty() || !seen.insert(l).second) {
        throw ValidationError("header labels must be non-empty and unique");
      }
    }
  }
  const int n = header ? static_cast<int>(result.labels.size())
                       : static_cast<int>(rows.size());
  if (static_cast<int>(rows.size() - first_data) != n) {
    throw ValidationError("matrix has " + std::to_string(n) + " columns but " +
                          std::to_string(rows.size() - first_data) + " rows");
  }
  if (!header) result.labels = DefaultLabels(n);
  result.matrix = SquareMatrix(n);
  for (int r = 0; r < n; ++r) {
    const CsvRow& row = rows[first_data + r];
    if (row.cells.size() != static_cast<size_t>(n) + label_cols) {
      throw ValidationError("line " + std::to_string(row.line) + ": expected " +
                            std::to_string(n + label_cols) + " cells, got " +
                            std::to_string(row.cells.size()));
    }
    if (label_cols == 1 && row.cells[0] != result.labels[r]) {
      throw ValidationError("line " + std::to_string(row.line) +
                            ": row label \"" + row.cells[0] +
                            "\" does not match header label \"" +
                            result.labels[r] + "\"");
    }
    for (int c = 0; c < n; ++c) {
      double x;
      if (!ParseDouble(row.cells[label_cols + c], &x)) {
        throw ValidationError("matrix entry at (" + std::to_string(r) + ", " +
                              std::to_string(c) + ") is not a number: \"" +
                              row.cells[label_cols + c] + "\"");
      }
      result.matrix(r, c) = x;
    }
  }
  return result;
}

LabeledScore ReadScoreCsv(std::istream& in) {
  std::vector<CsvRow> rows = ReadRows(in);
  if (!rows.empty() && rows[0].cells.size() == 2) {
    double unused;
    if (!ParseDouble(rows[0].cells[1], &unused)) rows.erase(rows.begin());
  }
  if (rows.empty()) throw ValidationError("score CSV has no rows");
  Labels labels;
  std::map<std::string, int> index;
  std::vector<std::pair<std::vector<int>, double>> entries;
  for (const CsvRow& row : rows) {
    if (row.cells.size() != 2) {
      throw ValidationError("line " + std::to_string(row.line) +
                            ": expected \"subset,value\"");
    }
    std::vector<int> pts;
    for (const std::string& l : SplitSubsetLabels(row.cells[0])) {
      auto [it, inserted] = index.emplace(l, static_cast<int>(labels.size()));
      if (inserted) labels.push_back(l);
      pts.push_back(it->second);
    }
    if (pts.empty()) {
      throw ValidationError("line " + std::to_string(row.line) +
                            ": empty subset");
    }
    double v;
    if (!ParseDouble(row.cells[1], &v)) {
      throw ValidationError("line " + std::to_string(row.line) +
                            ": value is not a number");
    }
    entries.emplace_back(std::move(pts), v);
  }
  const int n = static_cast<int>(labels.size());
  RequireDense(n, "score CSV");
  std::vector<double> values(size_t{1} << n, 0.0);
  std::vector<bool> seen(values.size(), false);
  for (const auto& [pts, v] : entries) {
    Mask a = 0;
    for (int p : pts) {
      if (Contains(a, p)) throw ValidationError("repeated label in a subset");
      a |= Bit(p);
    }
    if (seen[a]) {
      throw ValidationError("subset {" + JoinLabels(a, labels, " ") +
                            "} listed twice");
    }
    seen[a] = true;
    values[a] = v;
  }
  for (Mask a = 1; a < values.size(); ++a) {
    if (!seen[a]) {
      throw ValidationError("subset {" + JoinLabels(a, labels, " ") +
                            "} has no score");
    }
  }
  return LabeledScore{std::move(labels),
                      ScoreFunction::FromValues(n, std::move(values))};
}

void WriteScoreCsv(std::ostream& out, const Score& score, const Labels& labels,
                   bool mobius) {
  RequireDense(score.size(), "WriteScoreCsv");
  out << "mask,subset," << (mobius ? "mobius" : "value") << "\n";
  for (Mask a = 1; a <= FullMask(score.size()); ++a) {
    out << a << "," << JoinLabels(a, labels, " ") << ","
        << FormatDouble(mobius ? score.Mobius(a) : score.Value(a)) << "\n";
  }
}

void WritePartitionFunctionCsv(std::ostream& out, const PartitionFunction& h,
                               const Labels& labels) {
  out << "rgs,blocks,value\n";
  const std::vector<PartitionCode> codes = EnumeratePartitions(h.size());
  for (size_t r = 0; r < codes.size(); ++r) {
    std::string rgs;
    for (int x : codes[r].rgs) rgs += std::to_string(x);
    std::string blocks;
    const Partition p = ToPartition(codes[r]);
    for (Mask b : p.blocks()) {
      if (!blocks.empty()) blocks += "|";
      blocks += JoinLabels(b, labels, " ");
    }
    out << rgs << "," << blocks << "," << FormatDouble(h.values()[r]) << "\n";
  }
}

Json LabelToJson(const std::string& label) {
  const bool digits =
      !label.empty() && label.size() < 18 &&
      std::all_of(label.begin(), label.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
      (label.size() == 1 || label[0] != '0');
  if (digits) return Json(std::stoll(label));
  return Json(label);
}

Json SubsetToJson(Mask a, const Labels& labels) {
  Json out = Json::array();
  for (int i : Members(a)) out.push_back(LabelToJson(labels.at(i)));
  return out;
}

Mask SubsetFromJson(const Json& j, const Labels& labels) {
  if (!j.is_array()) throw ValidationError("subset must be a JSON array");
  const auto index = LabelIndex(labels);
  Mask a = 0;
  for (const Json& item : j) {
    const std::string l = LabelFromJson(item);
    auto it = index.find(l);
    if (it == index.end()) throw ValidationError("unknown label \"" + l + "\"");
    if (Contains(a, it->second)) {
      throw ValidationError("label \"" + l + "\" repeated in a subset");
    }
    a |= Bit(it->second);
  }
  if (a == 0) throw ValidationError("empty subset");
  return a;
}

Json PartitionToJson(const Partition& p, const Labels& labels) {
  Json out = Json::array();
  for (Mask b : p.blocks()) out.push_back(SubsetToJson(b, labels));
  return out;
}

std::vector<Mask> SubsetsFromJson(const Json& j, const Labels& labels) {
  if (!j.is_array()) throw ValidationError("expected a list of subsets");
  std::vector<Mask> out;
  for (const Json& item : j) out.push_back(SubsetFromJson(item, labels));
  return out;
}

Partition PartitionFromJson(const Json& j, const Labels& labels) {
  return Partition(static_cast<int>(labels.size()), SubsetsFromJson(j, labels));
}

Json CoverToJson(const FuzzyCover& cover, const Labels& labels) {
  Json memberships = Json::array();
  for (int i = 0; i < cover.size(); ++i) {
    Json masses = Json::array();
    for (const auto& [a, q] : cover.distribution(i)) {
      masses.push_back({{"subset", SubsetToJson(a, labels)}, {"mass", q}});
    }
    memberships.push_back(
        {{"point", LabelToJson(labels.at(i))}, {"masses", std::move(masses)}});
  }
  return Json{{"n", cover.size()}, {"memberships", std::move(memberships)}};
}

FuzzyCover CoverFromJson(const Json& j, const Labels& labels) {
  const Json& n_field = Field(j, "n");
  if (!n_field.is_number_integer() ||
      n_field.get<std::int64_t>() != static_cast<std::int64_t>(labels.size())) {
    throw ValidationError("cover \"n\" must equal the number of points (" +
                          std::to_string(labels.size()) + ")");
  }
  const auto index = LabelIndex(labels);
  FuzzyCover cover(static_cast<int>(labels.size()));
  std::vector<bool> seen(labels.size(), false);
  const Json& memberships = Field(j, "memberships");
  if (!memberships.is_array()) {
    throw ValidationError("\"memberships\" must be an array");
  }
  for (const Json& m : memberships) {
    const std::string l = LabelFromJson(Field(m, "point"));
    auto it = index.find(l);
    if (it == index.end()) throw ValidationError("unknown point \"" + l + "\"");
    if (seen[it->second]) {
      throw ValidationError("point \"" + l + "\" listed twice");
    }
    seen[it->second] = true;
    Distribution d;
    for (const Json& e : Field(m, "masses")) {
      const Json& mass = Field(e, "mass");
      if (!mass.is_number()) throw ValidationError("mass must be a number");
      d.emplace_back(SubsetFromJson(Field(e, "subset"), labels),
                     mass.get<double>());
    }
    cover.SetDistribution(it->second, std::move(d));
  }
  return cover;
}

Json TraceRecordToJson(const TraceRecord& r, const Labels& labels) {
  Json out;
  out["iteration"] = r.iteration;
  switch (r.kind) {
    case TraceRecord::Kind::kRoundUp:
      out["kind"] = "round_up";
      break;
    case TraceRecord::Kind::kSelect:
      out["kind"] = "select";
      break;
    case TraceRecord::Kind::kExtract:
      out["kind"] = "extract";
      break;
  }
  if (r.point >= 0) out["point"] = LabelToJson(labels.at(r.point));
  out["subset"] = SubsetToJson(r.subset, labels);
  out["value"] = r.value;
  out["global_score"] = r.global_score;
  if (!r.candidates.empty()) {
    Json cands = Json::array();
    for (const CandidateScore& c : r.candidates) {
      cands.push_back(
          {{"subset", SubsetToJson(c.subset, labels)}, {"score", c.score}});
    }
    out["candidates"] = std::move(cands);
  }
  return out;
}

Json TraceToJson(const SearchTrace& trace, const Labels& labels) {
  Json out = Json::array();
  for (const TraceRecord& r : trace.records) {
    out.push_back(TraceRecordToJson(r, labels));
  }
  return out;
}

void WriteTraceJsonLines(std::ostream& out, const SearchTrace& trace,
                         const Labels& labels) {
  for (const TraceRecord& r : trace.records) {
    out << TraceRecordToJson(r, labels).dump() << "\n";
  }
}

Json OptionsToJson(const SolverOptions& options) {
  return Json{{"tolerance", options.tolerance},
              {"tie_break", "lowest-mask"},
              {"loop2_order", "best-gain-first"},
              {"max_iterations", options.max_iterations},
              {"record_trace", options.record_trace}};
}

SolverOptions OptionsFromJson(const Json& j) {
  if (!j.is_object()) throw ValidationError("options must be a JSON object");
  SolverOptions options;
  for (const auto& [key, value] : j.items()) {
    if (key == "tolerance" && value.is_number()) {
      options.tolerance = value.get<double>();
    } else if (key == "max_iterations" && value.is_number_integer()) {
      options.max_iterations = value.get<int>();
    } else if (key == "record_trace" && value.is_boolean()) {
      options.record_trace = value.get<bool>();
    } else if (key == "tie_break" && value == "lowest-mask") {
    } else if (key == "loop2_order" && value == "best-gain-first") {
    } else {
      throw ValidationError("unsupported option \"" + key + "\": " +
                            value.dump());
    }
  }
  if (!(options.tolerance > 0.0)) {
    throw ValidationError("tolerance must be positive");
  }
  return options;
}

Json OracleReportToJson(const OracleReport& report, const Labels& labels) {
  Json violations = Json::array();
  for (const OracleViolation& v : report.violations) {
    violations.push_back({{"sample", v.sample},
                          {"kind", v.kind},
                          {"value", v.value},
                          {"bound", v.bound}});
  }
  return Json{
      {"best_partition", PartitionToJson(report.best_partition, labels)},
      {"best_score", report.best_score},
      {"samples_checked", report.samples_checked},
      {"max_cover_score_sampled", report.max_cover_score_sampled},
      {"violations", std::move(violations)},
      {"local_search",
       {{"runs", report.local_search_runs},
        {"optimal", report.local_search_optimal},
        {"gap_histogram", report.gap_histogram}}},
      {"ok", report.ok()}};
}

Json LatticeReportToJson(const LatticeCheckReport& report) {
  return Json{{"n", report.n},
              {"partitions", report.partitions},
              {"modular", report.modular},
              {"modular_expected", report.modular_expected},
              {"nonmodular_total", report.nonmodular_total},
              {"nonmodular_zero", report.nonmodular_zero},
              {"modular_values_match", report.modular_values_match},
              {"zeta_roundtrip", report.zeta_roundtrip},
              {"separation", report.separation},
              {"mobius_pairs_checked", report.mobius_pairs_checked},
              {"mobius_bottom_top", report.mobius_bottom_top},
              {"failures", report.failures},
              {"ok", report.ok()}};
}

}  // namespace mlcluster
