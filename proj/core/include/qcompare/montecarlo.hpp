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

// Monte Carlo oracle: sample Haar isometries and compare empirical averages
// with the closed forms.
//
// Trials are grouped in fixed-size chunks; chunk k draws from
// RngStream(seed, k) and chunk statistics are merged in chunk order, so a
// report depends only on (seed, n, chunk_size) and not on the thread count.

#ifndef QCOMPARE_MONTECARLO_HPP_
#define QCOMPARE_MONTECARLO_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qcompare/choi.hpp"
#include "qcompare/ensembles.hpp"

namespace qcompare {

inline constexpr std::size_t kMinMonteCarloSamples = 1000;
inline constexpr double kZThreshold = 4.0;
/// Lower bound on per-component standard errors when forming z-scores.
inline constexpr double kStandardErrorFloor = 1e-12;

enum class AverageMode { same, different };

std::string_view to_string(AverageMode mode);
AverageMode parse_average_mode(std::string_view text);

struct McOptions {
  /// 0 selects std::thread::hardware_concurrency().
  std::size_t threads = 0;
  std::size_t chunk_size = 1024;
};

/// Welford accumulator for one real component.
struct RunningStats {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x);
  void merge(const RunningStats& other);
  double variance() const;
  double standard_error() const;
};

struct McReport {
  std::string quantity;
  std::size_t n_samples = 0;
  /// Shape of the estimated quantity; matrices store (re, im) pairs per entry
  /// in row-major order, so estimate.size() == 2 * rows * cols.
  std::size_t rows = 1;
  std::size_t cols = 1;
  bool complex_entries = false;
  std::vector<std::string> labels;
  std::vector<double> estimate;
  std::vector<double> standard_error;
  std::vector<double> analytic;
  double standard_error_max = 0.0;
  /// max |estimate - analytic| / max(standard_error, kStandardErrorFloor)
  double z_max = 0.0;
  RngSeed seed;
  std::string generator_id;

  bool passes(double threshold = kZThreshold) const { return z_max <= threshold; }
};

/// Empirical Haar average of the two-box Choi matrix (one isometry for
/// `same`, an independent pair for `different`), against the closed form.
McReport estimate_avg_choi(OperationKind kind, AverageMode mode, const ComparisonDims& dims,
                           std::size_t n, RngSeed seed, const McOptions& options = {});

/// Simulates the full protocol: a fair coin picks the hypothesis, the boxes
/// act on the antisymmetric state and the probability of the correct verdict
/// is recorded exactly. Compared with the closed-form success probability.
McReport estimate_success(OperationKind kind, const ComparisonDims& dims, std::size_t n,
                          RngSeed seed, const McOptions& options = {});

/// Empirical (p_I, p_II) of the LP-optimal effect for the type-I cap epsilon,
/// compared with (1 - alpha t_A - beta t_S, p2_star).
McReport estimate_error_pair(OperationKind kind, const ComparisonDims& dims, double epsilon,
                             std::size_t n, RngSeed seed, const McOptions& options = {});

/// Choi matrix of (Phi_U (x) Phi_V), optionally followed by Delta (x) Delta,
/// evaluated directly from the isometry columns.
ComplexMatrix sampled_pair_choi(const Isometry& u, const Isometry& v, bool dephase_outputs);

}  // namespace qcompare

#endif  // QCOMPARE_MONTECARLO_HPP_
