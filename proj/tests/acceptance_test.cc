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

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mlcluster/cover_eval.h"
#include "mlcluster/initializers.h"
#include "mlcluster/lattice.h"
#include "mlcluster/oracle.h"
#include "mlcluster/quadratic_score.h"
#include "mlcluster/random.h"
#include "mlcluster/score.h"
#include "mlcluster/score_function.h"
#include "mlcluster/solve.h"
#include "test_util.h"

namespace mlcluster {
namespace {

constexpr double kTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string Fmt(const char* format, double x) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), format, x);
  return buf;
}

Outcome ThreePointEndToEnd() {
  Outcome o;
  const Score w(testing::ThreePoint());
  SolverOptions options;
  options.record_trace = true;
  const FuzzyCover start = InitUniform(3);
  const auto t0 = std::chrono::steady_clock::now();
  const LocalSearchResult r = LocalSearch(w, start, options);
  const double elapsed = Seconds(t0);
  o.Require(r.partition == Partition(3, {testing::M({1, 2}), testing::M({3})}),
            "partition is not {{1,2},{3}}");
  o.Require(std::abs(r.score - 1.0) <= kTol, "W != 1.0");
  bool selected_n = false;
  bool extracted_3 = false;
  for (const TraceRecord& t : r.trace.records) {
    if (t.kind == TraceRecord::Kind::kSelect && t.iteration == 1 &&
        t.subset == 7 && std::abs(t.value - 0.775) <= kTol) {
      selected_n = true;
    }
    if (t.kind == TraceRecord::Kind::kExtract && t.point == 2 &&
        std::abs(t.value - 0.3) <= kTol) {
      extracted_3 = true;
    }
  }
  o.Require(selected_n, "A*(1) is not N with sum 0.775");
  o.Require(extracted_3, "no Loop 2 extraction of point 3 with gain 0.3");
  o.Require(elapsed < 0.010, Fmt("runtime %.4f s >= 10 ms", elapsed));
  if (o.pass) o.detail = Fmt("runtime %.6f s", elapsed);
  return o;
}

Outcome CliqueClosedForm() {
  Outcome o;
  const double expected[] = {0.5, 1.0, 2.25, 5.0, 10.0};
  for (int a = 1; a <= 5; ++a) {
    const QuadraticScore q = QuadraticFromSimilarity(testing::Clique(5, a));
    const double v = q.value(FullMask(a));
    o.Require(std::abs(v - expected[a - 1]) <= kTol,
              "clique of size " + std::to_string(a) + " gives " +
                  std::to_string(v));
  }
  if (o.pass) o.detail = "0.5, 1, 2.25, 5, 10";
  return o;
}

Outcome TransformRoundTrips() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 12;
    std::vector<double> v(size_t{1} << n);
    v[0] = 0.0;
    for (size_t a = 1; a < v.size(); ++a) v[a] = rng.Uniform(-5.0, 5.0);
    const std::vector<double> back = ZetaTransform(MobiusTransform(v));
    for (size_t a = 0; a < v.size(); ++a) {
      worst = std::max(worst, std::abs(back[a] - v[a]));
    }
  }
  o.Require(worst <= kTol, Fmt("subset roundtrip error %.3g", worst));
  double worst_p = 0.0;
  for (int n = 1; n <= 8; ++n) {
    std::vector<double> h(BellNumber(n));
    for (double& x : h) x = rng.Uniform(-5.0, 5.0);
    const PartitionFunction back =
        ZetaInversion(MobiusInversion(PartitionFunction(n, h)));
    for (size_t r = 0; r < h.size(); ++r) {
      worst_p = std::max(worst_p, std::abs(back.values()[r] - h[r]));
    }
  }
  o.Require(worst_p <= kTol, Fmt("partition roundtrip error %.3g", worst_p));
  const double elapsed = Seconds(t0);
  o.Require(elapsed < 5.0, Fmt("runtime %.2f s >= 5 s", elapsed));
  if (o.pass) {
    o.detail = Fmt("max error %.3g", std::max(worst, worst_p)) +
               Fmt(", runtime %.2f s", elapsed);
  }
  return o;
}

FuzzyCover WithMass(const FuzzyCover& c, int i, Mask a, double t) {
  Distribution d;
  for (const auto& [b, q] : c.distribution(i)) {
    if (b != a) d.emplace_back(b, q);
  }
  d.emplace_back(a, t);
  FuzzyCover out = c;
  out.SetDistribution(i, std::move(d));
  return out;
}

Outcome GradientCorrectness() {
  Outcome o;
  Rng rng(202);
  constexpr double kStep = 1e-3;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    const Score w = trial % 2 == 0 ? Score(RandomQuadraticScore(n, rng.Next()))
                                   : Score(testing::RandomSetFunction(n, rng));
    const FuzzyCover c = RandomCover(n, rng.Next()).cover;
    const int i = static_cast<int>(rng.Next() % n);
    Mask a = 0;
    while (!Contains(a, i)) a = 1 + rng.Next() % FullMask(n);
    const double reduced = ComputeReducedScore(w, c, i)(a);
    const double derivative = Derivative(w, c, i, a);
    worst = std::max(worst, std::abs(reduced - derivative));
    for (double t : {0.0, 0.5, 1.0}) {
      const double lo = std::max(0.0, t - kStep);
      const double hi = std::min(1.0, t + kStep);
      const double slope =
          (internal::RawGlobalScore(w, WithMass(c, i, a, hi)) -
           internal::RawGlobalScore(w, WithMass(c, i, a, lo))) /
          (hi - lo);
      worst = std::max(worst, std::abs(slope - derivative));
    }
  }
  o.Require(worst <= kTol, Fmt("max disagreement %.3g", worst));
  if (o.pass) o.detail = Fmt("max disagreement %.3g", worst);
  return o;
}

Outcome RoundUpGuarantees() {
  Outcome o;
  Rng rng(303);
  int violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    const Score w = trial % 2 == 0 ? Score(RandomQuadraticScore(n, rng.Next()))
                                   : Score(testing::RandomSetFunction(n, rng));
    const FuzzyCover c = RandomCover(n, rng.Next()).cover;
    const double w0 = GlobalScore(w, c);
    const RoundUpResult up = RoundUp(w, c, Direction::kMax);
    const RoundUpResult down = RoundUp(w, c, Direction::kMin);
    double prev = w0;
    for (const TraceRecord& r : up.trace.records) {
      if (r.global_score < prev - kTol) ++violations;
      prev = r.global_score;
    }
    prev = w0;
    for (const TraceRecord& r : down.trace.records) {
      if (r.global_score > prev + kTol) ++violations;
      prev = r.global_score;
    }
    if (GlobalScore(w, down.cover) > w0 + kTol) ++violations;
    if (GlobalScore(w, up.cover) < w0 - kTol) ++violations;
    if (static_cast<int>(up.trace.records.size()) > n) ++violations;
    if (static_cast<int>(down.trace.records.size()) > n) ++violations;
    for (int i = 0; i < n; ++i) {
      if (!up.cover.IsVertex(i) || !down.cover.IsVertex(i)) ++violations;
    }
  }
  o.Require(violations == 0, std::to_string(violations) + " violations");
  if (o.pass) o.detail = "100 instances, 0 violations";
  return o;
}

Outcome PartitionBound() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(404);
  int violations = 0;
  for (int instance = 0; instance < 20; ++instance) {
    const Score w(RandomQuadraticScore(7, rng.Next()));
    const OracleReport r = CorollaryCheck(w, 1000, rng.Next(), kTol);
    violations += static_cast<int>(r.violations.size());
    o.Require(r.samples_checked == 1000, "sample count mismatch");
  }
  const double elapsed = Seconds(t0);
  o.Require(violations == 0, std::to_string(violations) + " violations");
  o.Require(elapsed < 30.0, Fmt("runtime %.2f s >= 30 s", elapsed));
  if (o.pass) o.detail = Fmt("0 violations, runtime %.2f s", elapsed);
  return o;
}

Outcome LocalMaximizerCertification() {
  Outcome o;
  Rng rng(505);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 9;
    const Score w(RandomQuadraticScore(n, rng.Next()));
    const LocalSearchResult r = LocalSearch(w, InitUniform(n));
    if (!IsLocalMaximizer(w, EmbedPartition(r.partition)) ||
        !OutlierViolations(w, r.partition).empty()) {
      ++failures;
    }
  }
  o.Require(failures == 0, std::to_string(failures) + " uncertified outputs");
  if (o.pass) o.detail = "100 instances certified";
  return o;
}

Outcome AppendixSuite() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  LatticeCheckOptions options;
  options.random_functions = 50;
  const LatticeCheckReport r4 = CheckLattice(4, options);
  o.Require(r4.nonmodular_total == 3 && r4.nonmodular_zero == 3,
            "non-modular zeros at n = 4");
  o.Require(r4.modular == 12 && r4.modular_values_match,
            "modular values at n = 4");
  std::uint64_t pairs = 0;
  for (int n = 1; n <= 8; ++n) {
    const LatticeCheckReport r = CheckLattice(n, options);
    o.Require(r.modular == (1 << n) - n,
              "modular count at n = " + std::to_string(n));
    o.Require(r.separation, "separation at n = " + std::to_string(n));
    o.Require(r.ok(), r.failures.empty() ? "" : r.failures.front());
    if (n <= 5) {
      o.Require(r.mobius_pairs_checked > 0, "recursion not checked");
      pairs += r.mobius_pairs_checked;
    }
  }
  const double elapsed = Seconds(t0);
  o.Require(elapsed < 60.0, Fmt("runtime %.2f s >= 60 s", elapsed));
  if (o.pass) {
    o.detail = std::to_string(pairs) + " comparable pairs" +
               Fmt(", runtime %.2f s", elapsed);
  }
  return o;
}

Outcome ScaleGuard() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const Score dense(RandomQuadraticScore(16, 606));
  const LocalSearchResult a = LocalSearch(dense, InitUniform(16));
  const double dense_s = Seconds(t0);
  o.Require(OutlierViolations(dense, a.partition).empty(),
            "n = 16 output has outliers");
  o.Require(dense_s < 60.0, Fmt("n = 16 runtime %.2f s", dense_s));

  t0 = std::chrono::steady_clock::now();
  const int n = 40;
  const Score restricted(RandomQuadraticScore(n, 707));
  std::vector<Mask> maximal;
  for (int s = 0; s < n; s += 10) {
    maximal.push_back(FullMask(std::min(12, n - s)) << s);
  }
  const LocalSearchResult b = LocalSearch(
      restricted,
      InitRestricted(restricted, maximal, RestrictedMode::kUniform));
  const double restricted_s = Seconds(t0);
  for (Mask blk : b.partition.blocks()) {
    o.Require(PopCount(blk) <= 12, "block above the size cap");
  }
  o.Require(restricted_s < 60.0, Fmt("n = 40 runtime %.2f s", restricted_s));
  if (o.pass) {
    o.detail = Fmt("n = 16 dense %.2f s", dense_s) +
               Fmt(", n = 40 restricted %.2f s", restricted_s);
  }
  return o;
}

}  // namespace
}  // namespace mlcluster

int main() {
  using mlcluster::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria =
      {{"three-point example end to end", mlcluster::ThreePointEndToEnd},
       {"clique closed form", mlcluster::CliqueClosedForm},
       {"transform roundtrips", mlcluster::TransformRoundTrips},
       {"gradient correctness", mlcluster::GradientCorrectness},
       {"round-up guarantees", mlcluster::RoundUpGuarantees},
       {"partition bound sampling", mlcluster::PartitionBound},
       {"local maximizer certification",
        mlcluster::LocalMaximizerCertification},
       {"appendix suite", mlcluster::AppendixSuite},
       {"scale guard", mlcluster::ScaleGuard}};
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first, o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
