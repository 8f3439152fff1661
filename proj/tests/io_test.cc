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

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mlcluster/initializers.h"
#include "mlcluster/io.h"
#include "mlcluster/lattice.h"
#include "test_util.h"

namespace mlcluster {
namespace {

using testing::ThreePoint;
using testing::M;

LabeledMatrix Matrix(const std::string& text) {
  std::istringstream in(text);
  return ReadMatrixCsv(in);
}

TEST(MatrixCsvTest, PlainNumbers) {
  const LabeledMatrix m = Matrix("1,0.5\n0.5,1\n");
  EXPECT_EQ(m.labels, DefaultLabels(2));
  EXPECT_EQ(m.matrix(0, 1), 0.5);
}

TEST(MatrixCsvTest, HeaderWithCornerAndRowLabels) {
  const LabeledMatrix m =
      Matrix("# comment\n,a,b\n\na, 1, 0.25\n\"b\",0.25,1\r\n");
  EXPECT_EQ(m.labels, (Labels{"a", "b"}));
  EXPECT_EQ(m.matrix(1, 0), 0.25);
}

TEST(MatrixCsvTest, HeaderWithoutRowLabels) {
  const LabeledMatrix m = Matrix("x,y\n1,0\n0,1\n");
  EXPECT_EQ(m.labels, (Labels{"x", "y"}));
  EXPECT_EQ(m.matrix(1, 1), 1.0);
}

TEST(MatrixCsvTest, RowLabelsWithoutCorner) {
  const LabeledMatrix m = Matrix("a,b\na,1,0\nb,0,1\n");
  EXPECT_EQ(m.labels, (Labels{"a", "b"}));
}

TEST(MatrixCsvTest, Errors) {
  EXPECT_THROW(Matrix(""), ValidationError);
  EXPECT_THROW(Matrix("1,0\n0\n"), ValidationError);
  EXPECT_THROW(Matrix("1,0\n0,1\n1,1\n"), ValidationError);
  EXPECT_THROW(Matrix("1,x\n0,1\n"), ValidationError);
  EXPECT_THROW(Matrix(",a,b\nb,1,0\na,0,1\n"), ValidationError);
  EXPECT_THROW(Matrix(",a,a\na,1,0\na,0,1\n"), ValidationError);
  EXPECT_THROW(Matrix("\"1,0\n"), ValidationError);
  try {
    Matrix("1,0\n0,oops\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("(1, 1)"), std::string::npos);
  }
}

TEST(ScoreCsvTest, ThreePoint) {
  std::istringstream in(
      "subset,value\n1,0.2\n2,0.2\n3,0.2\n1 2,0.8\n1;3,0.3\n2 3,0.6\n"
      "1 2 3,0.7\n");
  const LabeledScore s = ReadScoreCsv(in);
  EXPECT_EQ(s.labels, DefaultLabels(3));
  EXPECT_EQ(s.score.values(), ThreePoint().values());
}

TEST(ScoreCsvTest, LabelsByFirstAppearance) {
  std::istringstream in("b,1\na,2\na b,5\n");
  const LabeledScore s = ReadScoreCsv(in);
  EXPECT_EQ(s.labels, (Labels{"b", "a"}));
  EXPECT_EQ(s.score.value(1), 1.0);
  EXPECT_EQ(s.score.value(2), 2.0);
}

TEST(ScoreCsvTest, Errors) {
  std::istringstream missing("1,1\n2,1\n");
  EXPECT_THROW(ReadScoreCsv(missing), ValidationError);
  std::istringstream twice("1,1\n1,2\n");
  EXPECT_THROW(ReadScoreCsv(twice), ValidationError);
  std::istringstream bad("1,x\n");
  EXPECT_THROW(ReadScoreCsv(bad), ValidationError);
  std::istringstream empty("subset,value\n");
  EXPECT_THROW(ReadScoreCsv(empty), ValidationError);
}

TEST(ScoreCsvTest, WriteReadRoundTrip) {
  std::ostringstream out;
  WriteScoreCsv(out, Score(ThreePoint()), DefaultLabels(3), false);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "mask,subset,value");
  std::ostringstream two_col;
  two_col << "subset,value\n";
  while (std::getline(lines, line)) {
    two_col << line.substr(line.find(',') + 1) << "\n";
  }
  std::istringstream in(two_col.str());
  EXPECT_EQ(ReadScoreCsv(in).score.values(), ThreePoint().values());
}

TEST(PartitionFunctionCsvTest, Rows) {
  std::ostringstream out;
  const PartitionFunction h = SeparableFrom(Score(ThreePoint()));
  WritePartitionFunctionCsv(out, h, DefaultLabels(3));
  EXPECT_EQ(out.str(),
            "rgs,blocks,value\n"
            "000,1 2 3,0.69999999999999996\n"
            "001,1 2|3,1\n"
            "010,1 3|2,0.5\n"
            "011,1|2 3,0.80000000000000004\n"
            "012,1|2|3,0.60000000000000009\n");
}

TEST(JsonTest, Labels) {
  EXPECT_EQ(LabelToJson("12"), Json(12));
  EXPECT_EQ(LabelToJson("012"), Json("012"));
  EXPECT_EQ(LabelToJson("a"), Json("a"));
  const Labels labels = {"a", "7"};
  EXPECT_EQ(SubsetToJson(3, labels).dump(), "[\"a\",7]");
  EXPECT_EQ(SubsetFromJson(Json::parse("[7, \"a\"]"), labels), Mask{3});
  EXPECT_THROW(SubsetFromJson(Json::parse("[8]"), labels), ValidationError);
  EXPECT_THROW(SubsetFromJson(Json::parse("[7, 7]"), labels),
               ValidationError);
  EXPECT_THROW(SubsetFromJson(Json::parse("[]"), labels), ValidationError);
  EXPECT_THROW(SubsetFromJson(Json::parse("[1.5]"), labels), ValidationError);
}

TEST(JsonTest, PartitionRoundTrip) {
  const Labels labels = DefaultLabels(4);
  const Partition p(4, {M({1, 4}), M({2, 3})});
  const Json j = PartitionToJson(p, labels);
  EXPECT_EQ(j.dump(), "[[1,4],[2,3]]");
  EXPECT_EQ(PartitionFromJson(j, labels), p);
  EXPECT_THROW(PartitionFromJson(Json::parse("[[1,2],[2,3,4]]"), labels),
               ValidationError);
}

TEST(JsonTest, CoverRoundTrip) {
  const Labels labels = DefaultLabels(3);
  const FuzzyCover u = InitUniform(3);
  const Json j = CoverToJson(u, labels);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(CoverFromJson(j, labels), u);
  Json bad = j;
  bad["n"] = 4;
  EXPECT_THROW(CoverFromJson(bad, labels), ValidationError);
  Json twice = j;
  twice["memberships"].push_back(j["memberships"][0]);
  EXPECT_THROW(CoverFromJson(twice, labels), ValidationError);
  EXPECT_THROW(CoverFromJson(Json::parse("{\"n\":3}"), labels),
               ValidationError);
}

TEST(JsonTest, OptionsRoundTrip) {
  SolverOptions o;
  o.tolerance = 1e-7;
  o.max_iterations = 50;
  o.record_trace = true;
  const SolverOptions back = OptionsFromJson(OptionsToJson(o));
  EXPECT_EQ(back.tolerance, 1e-7);
  EXPECT_EQ(back.max_iterations, 50);
  EXPECT_TRUE(back.record_trace);
  EXPECT_THROW(OptionsFromJson(Json::parse("{\"speed\": 1}")),
               ValidationError);
  EXPECT_THROW(OptionsFromJson(Json::parse("{\"tie_break\": \"random\"}")),
               ValidationError);
  EXPECT_THROW(OptionsFromJson(Json::parse("{\"tolerance\": -1}")),
               ValidationError);
}

TEST(JsonTest, TraceLines) {
  SearchTrace t;
  TraceRecord r;
  r.kind = TraceRecord::Kind::kExtract;
  r.iteration = 2;
  r.point = 2;
  r.subset = 7;
  r.value = 0.5;
  r.global_score = 1.0;
  t.records.push_back(r);
  std::ostringstream out;
  WriteTraceJsonLines(out, t, DefaultLabels(3));
  EXPECT_EQ(out.str(),
            "{\"iteration\":2,\"kind\":\"extract\",\"point\":3,"
            "\"subset\":[1,2,3],\"value\":0.5,\"global_score\":1.0}\n");
}

}  // namespace
}  // namespace mlcluster
