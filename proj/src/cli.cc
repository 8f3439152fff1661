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

#include "mlcluster/cli.h"

#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>
#include <vector>

#include "mlcluster/cover_eval.h"
#include "mlcluster/initializers.h"
#include "mlcluster/lattice.h"
#include "mlcluster/oracle.h"
#include "mlcluster/quadratic_score.h"
#include "mlcluster/solve.h"

namespace mlcluster {
namespace {

std::string ReadAll(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json ReadJson(const std::string& path) {
  const std::string text = ReadAll(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
  if (!out) throw ValidationError("write failed for " + path);
}

void WriteJson(const std::string& path, const Json& j) {
  WriteText(path, j.dump(2) + "\n");
}

SolverOptions OptionsFor(const RunConfig& config) {
  SolverOptions options;
  if (!config.options_path.empty()) {
    options = OptionsFromJson(ReadJson(config.options_path));
  } else {
    options.tolerance = config.tolerance;
  }
  if (config.trace) options.record_trace = true;
  return options;
}

std::string PointName(const Labels& labels, int i) {
  return "point " + labels.at(i);
}

// Same checks as RequireValid, with points named by label.
void RequireValidCover(const FuzzyCover& cover, const Labels& labels) {
  const CoverDiagnostics d = Validate(cover);
  if (d.valid) return;
  if (!d.negative_masses.empty()) {
    throw ValidationError(PointName(labels, d.negative_masses[0].first) +
                          " has a negative mass");
  }
  if (!d.locality_violations.empty()) {
    const auto [i, a] = d.locality_violations[0];
    throw ValidationError(PointName(labels, i) + " has mass on subset " +
                          SubsetToJson(a, labels).dump() +
                          " which does not contain it");
  }
  const int i = d.bad_simplex_points.at(0);
  throw ValidationError(PointName(labels, i) + " masses sum to " +
                        std::to_string(d.simplex_sums.at(i)) + ", not 1");
}

template <typename Fn>
int Guard(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

void CheckSize(int n, const RunConfig& config) {
  if (n > config.max_n) {
    throw CapacityError("input has " + std::to_string(n) +
                        " points, --max-n is " + std::to_string(config.max_n));
  }
}

}  // namespace

void RunConfig::Check() const {
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
  if (init != "uniform" && init != "score" && init != "restricted") {
    throw ValidationError("unknown initializer \"" + init + "\"");
  }
  if (init == "restricted" && restrict_path.empty()) {
    throw ValidationError("restricted initializer needs a subset collection");
  }
  if (max_n < 1) throw ValidationError("--max-n must be positive");
}

void ParseInit(const std::string& text, RunConfig& config) {
  const std::string prefix = "restricted:";
  if (text.rfind(prefix, 0) == 0) {
    config.init = "restricted";
    config.restrict_path = text.substr(prefix.size());
  } else {
    config.init = text;
  }
}

InputKind ParseInputKind(const std::string& text) {
  if (text == "similarity") return InputKind::kSimilarity;
  if (text == "distance") return InputKind::kDistance;
  if (text == "score") return InputKind::kScore;
  throw ValidationError("unknown input kind \"" + text + "\"");
}

DistanceMode ParseNormalize(const std::string& text) {
  if (text == "max") return DistanceMode::kMaxNormalize;
  if (text == "none") return DistanceMode::kAlreadyNormalized;
  throw ValidationError("unknown normalization \"" + text + "\"");
}

Problem LoadProblem(const RunConfig& config) {
  std::istringstream in(ReadAll(config.input));
  if (config.kind == InputKind::kScore) {
    LabeledScore s = ReadScoreCsv(in);
    CheckSize(s.score.size(), config);
    return Problem{std::move(s.labels), Score(std::move(s.score))};
  }
  LabeledMatrix m = ReadMatrixCsv(in);
  const int n = m.matrix.size();
  CheckSize(n, config);
  SimilarityMatrix s = config.kind == InputKind::kDistance
                           ? SimilarityFromDistances(m.matrix, config.normalize)
                           : SimilarityMatrix(m.matrix);
  if (n == 1) {
    return Problem{std::move(m.labels),
                   Score(ScoreFunction::FromValues(1, {0.0, 0.0}))};
  }
  return Problem{std::move(m.labels), Score(QuadraticFromSimilarity(s))};
}

int CmdCluster(const RunConfig& config, std::ostream& err) {
  return Guard(err, [&] {
    config.Check();
    const Problem problem = LoadProblem(config);
    const Score& score = problem.score;
    const int n = score.size();
    const SolverOptions options = OptionsFor(config);
    options.Check(n);

    Partition partition = Partition::Finest(n);
    double w = score.Value(1);
    SearchTrace trace;
    if (n > 1) {
      FuzzyCover start(n);
      if (config.init == "uniform") {
        start = InitUniform(n);
      } else if (config.init == "score") {
        start = InitScoreProportional(score);
      } else {
        const std::vector<Mask> maximal = SubsetsFromJson(
            ReadJson(config.restrict_path), problem.labels);
        start = InitRestricted(score, maximal, RestrictedMode::kUniform);
      }
      LocalSearchResult result = LocalSearch(score, start, options);
      partition = std::move(result.partition);
      w = result.score;
      trace = std::move(result.trace);
    }
    const bool certified =
        IsLocalMaximizer(score, EmbedPartition(partition), options.tolerance) &&
        OutlierViolations(score, partition, options.tolerance).empty();

    Json out;
    out["partition"] = PartitionToJson(partition, problem.labels);
    out["score"] = w;
    out["certified_local_max"] = certified;
    out["trace"] = TraceToJson(trace, problem.labels);
    WriteJson(config.output, out);
    if (!config.trace_jsonl.empty()) {
      std::ostringstream lines;
      WriteTraceJsonLines(lines, trace, problem.labels);
      WriteText(config.trace_jsonl, lines.str());
    }
    return 0;
  });
}

int CmdScore(const RunConfig& config, const std::string& structure_path,
             std::ostream& err) {
  return Guard(err, [&] {
    config.Check();
    const Problem problem = LoadProblem(config);
    const Score& score = problem.score;
    const Labels& labels = problem.labels;
    const int n = score.size();
    Json structure = ReadJson(structure_path);
    if (structure.is_object() && structure.contains("partition")) {
      structure = structure.at("partition");
    }

    Json out;
    if (structure.is_array()) {
      const Partition p(n, SubsetsFromJson(structure, labels));
      Json blocks = Json::array();
      for (Mask b : p.blocks()) {
        blocks.push_back(
            {{"subset", SubsetToJson(b, labels)}, {"score", score.Value(b)}});
      }
      out["kind"] = "partition";
      out["score"] = PartitionScore(score, p);
      out["blocks"] = std::move(blocks);
      out["support_condition"] = true;
      out["outliers"] = Json::array();
      for (const auto& [i, a] : OutlierViolations(score, p, config.tolerance)) {
        out["outliers"].push_back({{"point", LabelToJson(labels.at(i))},
                                   {"block", SubsetToJson(a, labels)}});
      }
    } else {
      const FuzzyCover cover = CoverFromJson(structure, labels);
      RequireValidCover(cover, labels);
      const CoverDiagnostics d = Validate(cover);
      Json columns = Json::array();
      for (const Column& c : cover.Columns()) {
        Json members = Json::array();
        for (const Member& m : c.members) {
          members.push_back(
              {{"point", LabelToJson(labels.at(m.point))}, {"mass", m.mass}});
        }
        columns.push_back({{"subset", SubsetToJson(c.subset, labels)},
                           {"members", std::move(members)},
                           {"value", score.Mle(c.members)}});
      }
      Json partial = Json::array();
      for (Mask a : d.partial_support) {
        partial.push_back(SubsetToJson(a, labels));
      }
      out["kind"] = "cover";
      out["score"] = GlobalScore(score, cover);
      out["subsets"] = std::move(columns);
      out["support_condition"] = d.support_exact;
      out["support_condition_pruned"] = d.support_exact_pruned;
      out["partial_support"] = std::move(partial);
    }
    WriteJson(config.output, out);
    return 0;
  });
}

int CmdOracle(const RunConfig& config, int samples,
              std::optional<int> random_n, std::ostream& err) {
  return Guard(err, [&] {
    config.Check();
    if (samples < 0) throw ValidationError("sample count must be >= 0");
    Problem problem{Labels{}, Score(ScoreFunction::FromValues(1, {0.0, 0.0}))};
    if (random_n.has_value() && config.input.empty()) {
      if (*random_n > kMaxEnumerateN) {
        throw CapacityError("oracle needs n <= " +
                            std::to_string(kMaxEnumerateN));
      }
      if (*random_n < 2) throw ValidationError("random instance needs n >= 2");
      problem = Problem{DefaultLabels(*random_n),
                        Score(RandomQuadraticScore(*random_n, config.seed))};
    } else {
      problem = LoadProblem(config);
    }
    if (problem.score.size() > kMaxEnumerateN) {
      throw CapacityError("oracle needs n <= " +
                          std::to_string(kMaxEnumerateN) + ", got " +
                          std::to_string(problem.score.size()));
    }
    const OracleReport report =
        CorollaryCheck(problem.score, samples, config.seed, config.tolerance);
    WriteJson(config.output, OracleReportToJson(report, problem.labels));
    if (!report.ok()) {
      err << "oracle found " << report.violations.size() << " violation(s)\n";
      return 3;
    }
    return 0;
  });
}

int CmdLatticeCheck(int n, const RunConfig& config, int random_functions,
                    std::ostream& err) {
  return Guard(err, [&] {
    if (n < 1) throw ValidationError("n must be >= 1");
    if (n > kMaxInversionN) {
      throw CapacityError("lattice check needs n <= " +
                          std::to_string(kMaxInversionN) + ", got " +
                          std::to_string(n));
    }
    LatticeCheckOptions options;
    options.seed = config.seed;
    options.random_functions = random_functions;
    options.tolerance = config.tolerance;
    const LatticeCheckReport report = CheckLattice(n, options);
    WriteJson(config.output, LatticeReportToJson(report));
    if (!report.ok()) {
      for (const std::string& f : report.failures) err << f << "\n";
      return 3;
    }
    return 0;
  });
}

}  // namespace mlcluster
