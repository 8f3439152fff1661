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

#ifndef MLCLUSTER_IO_H_
#define MLCLUSTER_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "mlcluster/fuzzy_cover.h"
#include "mlcluster/lattice.h"
#include "mlcluster/oracle.h"
#include "mlcluster/score.h"
#include "mlcluster/similarity.h"
#include "mlcluster/solve.h"

namespace mlcluster {

using Json = nlohmann::ordered_json;

// Point labels, index i names point i.
using Labels = std::vector<std::string>;

Labels DefaultLabels(int n);  // "1", ..., "n"

struct LabeledMatrix {
  Labels labels;
  SquareMatrix matrix;
};

// Comma-separated square matrix. An optional first row of labels is
// recognized by a non-numeric cell; the row may start with an empty corner
// cell, and each following row then starts with its label, which must match
// the header. Blank lines and lines starting with '#' are skipped.
LabeledMatrix ReadMatrixCsv(std::istream& in);

struct LabeledScore {
  Labels labels;
  ScoreFunction score;
};

// Direct set-function input: one row per non-empty subset,
// "<labels separated by spaces or ';'>,<value>", with an optional
// "subset,value" header. Points are numbered by first appearance and every
// non-empty subset must appear exactly once.
LabeledScore ReadScoreCsv(std::istream& in);

// Rows "mask,subset,value" for every non-empty subset (n <= kMaxDenseN).
void WriteScoreCsv(std::ostream& out, const Score& score, const Labels& labels,
                   bool mobius);
// Rows "rgs,blocks,value" in rank order.
void WritePartitionFunctionCsv(std::ostream& out, const PartitionFunction& h,
                               const Labels& labels);

// Labels are written as JSON integers when they spell one, else strings.
Json LabelToJson(const std::string& label);
Json SubsetToJson(Mask a, const Labels& labels);
Mask SubsetFromJson(const Json& j, const Labels& labels);

Json PartitionToJson(const Partition& p, const Labels& labels);
Partition PartitionFromJson(const Json& j, const Labels& labels);
// Possibly overlapping list of subsets, e.g. a restriction collection.
std::vector<Mask> SubsetsFromJson(const Json& j, const Labels& labels);

// {"n": ..., "memberships": [{"point": i, "masses": [{"subset": [...],
// "mass": x}]}]}; "point" is a label.
Json CoverToJson(const FuzzyCover& cover, const Labels& labels);
FuzzyCover CoverFromJson(const Json& j, const Labels& labels);

Json TraceRecordToJson(const TraceRecord& r, const Labels& labels);
Json TraceToJson(const SearchTrace& trace, const Labels& labels);
// One JSON object per line.
void WriteTraceJsonLines(std::ostream& out, const SearchTrace& trace,
                         const Labels& labels);

Json OptionsToJson(const SolverOptions& options);
// Missing keys keep their defaults; unknown keys are rejected.
SolverOptions OptionsFromJson(const Json& j);

Json OracleReportToJson(const OracleReport& report, const Labels& labels);
Json LatticeReportToJson(const LatticeCheckReport& report);

}  // namespace mlcluster

#endif  // MLCLUSTER_IO_H_
