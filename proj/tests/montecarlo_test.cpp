// Copyright 2026 The qcompare Authors
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

#include "qcompare/montecarlo.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "qcompare/asymmetric.hpp"
#include "qcompare/errors.hpp"
#include "qcompare/symmetric.hpp"

namespace qcompare {
namespace {

TEST(montecarlo, RunningStatsMatchesTwoPass) {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> dist(3.0, 2.0);
  std::vector<double> xs(1000);
  for (double& x : xs) x = dist(gen);
  RunningStats all, left, right;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    all.add(xs[i]);
    (i < 377 ? left : right).add(xs[i]);
  }
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= xs.size();
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= xs.size() - 1;
  EXPECT_NEAR(all.mean, mean, 1e-12);
  EXPECT_NEAR(all.variance(), var, 1e-10);
  left.merge(right);
  EXPECT_EQ(left.count, all.count);
  EXPECT_NEAR(left.mean, all.mean, 1e-12);
  EXPECT_NEAR(left.variance(), all.variance(), 1e-10);
  RunningStats empty;
  empty.merge(all);
  EXPECT_NEAR(empty.mean, all.mean, 0.0);
}

TEST(montecarlo, ModeParsing) {
  EXPECT_EQ(parse_average_mode("same"), AverageMode::same);
  EXPECT_EQ(parse_average_mode("different"), AverageMode::different);
  EXPECT_EQ(to_string(AverageMode::different), "different");
  EXPECT_THROW(parse_average_mode("both"), PreconditionError);
}

TEST(montecarlo, RejectsTooFewSamples) {
  EXPECT_THROW(estimate_success(OperationKind::channel, {2, 2, 1}, 999, RngSeed{1}), PreconditionError);
  EXPECT_THROW(estimate_avg_choi(OperationKind::channel, AverageMode::same, {2, 2, 1}, 10, RngSeed{1}),
               PreconditionError);
  EXPECT_THROW(estimate_success(OperationKind::channel, {1, 2, 2}, 2000, RngSeed{1}), PreconditionError);
}

TEST(montecarlo, SameSeedReproduces) {
  const auto a = estimate_success(OperationKind::channel, {2, 2, 2}, 3000, RngSeed{42});
  const auto b = estimate_success(OperationKind::channel, {2, 2, 2}, 3000, RngSeed{42});
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.standard_error, b.standard_error);
  const auto c = estimate_success(OperationKind::channel, {2, 2, 2}, 3000, RngSeed{43});
  EXPECT_NE(a.estimate, c.estimate);
  EXPECT_EQ(a.generator_id, std::string(RngStream::kGeneratorId));
  EXPECT_EQ(a.seed.value, 42u);
}

TEST(montecarlo, ResultIndependentOfThreadCount) {
  McOptions one;
  one.threads = 1;
  McOptions three;
  three.threads = 3;
  const auto a = estimate_error_pair(OperationKind::povm, {2, 2, 2}, 0.2, 4000, RngSeed{9}, one);
  const auto b = estimate_error_pair(OperationKind::povm, {2, 2, 2}, 0.2, 4000, RngSeed{9}, three);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.standard_error, b.standard_error);
}

TEST(montecarlo, StandardErrorScalesWithSampleCount) {
  const auto a = estimate_success(OperationKind::channel, {2, 3, 2}, 8192, RngSeed{77});
  const auto b = estimate_success(OperationKind::channel, {2, 3, 2}, 16384, RngSeed{78});
  EXPECT_NEAR(b.standard_error[0] / a.standard_error[0], 1.0 / std::sqrt(2.0), 0.05);
}

TEST(montecarlo, SuccessEstimates) {
  for (OperationKind kind : {OperationKind::channel, OperationKind::povm})
    for (const ComparisonDims dims : {ComparisonDims{2, 2, 1}, ComparisonDims{2, 3, 2}}) {
      const McReport r = estimate_success(kind, dims, 10000, RngSeed{1234});
      ASSERT_EQ(r.estimate.size(), 1u);
      EXPECT_EQ(r.analytic[0], p_success(kind, dims.d_out, dims.env));
      EXPECT_TRUE(r.passes()) << to_string(kind) << " z=" << r.z_max;
    }
}

TEST(montecarlo, ChoiEstimates) {
  const ComparisonDims dims{2, 2, 2};
  for (OperationKind kind : {OperationKind::channel, OperationKind::povm})
    for (AverageMode mode : {AverageMode::same, AverageMode::different}) {
      const McReport r = estimate_avg_choi(kind, mode, dims, 5000, RngSeed{555});
      EXPECT_EQ(r.rows, 16u);
      EXPECT_EQ(r.estimate.size(), 2u * 16u * 16u);
      EXPECT_TRUE(r.complex_entries);
      EXPECT_TRUE(r.passes()) << to_string(kind) << "/" << to_string(mode) << " z=" << r.z_max;
    }
}

TEST(montecarlo, ErrorPairEstimates) {
  for (OperationKind kind : {OperationKind::channel, OperationKind::povm})
    for (double eps : {0.0, 0.3}) {
      const McReport r = estimate_error_pair(kind, {2, 2, 2}, eps, 10000, RngSeed{8080});
      ASSERT_EQ(r.labels.size(), 2u);
      EXPECT_EQ(r.labels[0], "p_I");
      EXPECT_NEAR(r.analytic[1], p2_star(kind, 2, 2, eps), 1e-12);
      EXPECT_TRUE(r.passes()) << to_string(kind) << " eps=" << eps << " z=" << r.z_max;
    }
}

TEST(montecarlo, DetectsWrongAnalyticValue) {
  McReport r = estimate_success(OperationKind::channel, {2, 2, 1}, 20000, RngSeed{42});
  const double z = std::abs(r.estimate[0] - 0.75) / r.standard_error[0];
  EXPECT_GT(z, kZThreshold);
}

}  // namespace
}  // namespace qcompare
