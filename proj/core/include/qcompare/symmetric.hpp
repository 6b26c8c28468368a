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

// Symmetric (Holevo-Helstrom) comparison of two Haar-random boxes.

#ifndef QCOMPARE_SYMMETRIC_HPP_
#define QCOMPARE_SYMMETRIC_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcompare/choi.hpp"
#include "qcompare/ensembles.hpp"
#include "qcompare/matcore.hpp"

namespace qcompare {

/// Optimal success probability for channels: 1/2 + (1/4)(d^2-1)/(d^2 s - d).
double p_success_channels(std::size_t d_out, std::size_t env);
/// Optimal success probability for POVMs: 1/2 + (1/2)(d-1)/(d(sd-1)).
/// A single-outcome POVM (d_out = 1) carries no information and yields 1/2.
double p_success_povm(std::size_t d_out, std::size_t env);
double p_success(OperationKind kind, std::size_t d_out, std::size_t env);
/// Channels with a one-dimensional input space (state preparators).
double p_success_trivial_input(std::size_t d_out, std::size_t env);

/// Distribution over environment sizes; weights must sum to 1 within 1e-12.
class EnvDistribution {
 public:
  explicit EnvDistribution(std::vector<std::pair<std::size_t, double>> support);

  static EnvDistribution point_mass(std::size_t env);
  /// Point mass at env = d_in * d_out (Hilbert-Schmidt measure on channels).
  static EnvDistribution hilbert_schmidt(std::size_t d_in, std::size_t d_out);

  const std::vector<std::pair<std::size_t, double>>& support() const noexcept { return support_; }

 private:
  std::vector<std::pair<std::size_t, double>> support_;
};

/// Success probability averaged over the environment distribution.
double averaged_p(OperationKind kind, std::size_t d_out, const EnvDistribution& pi);

/// (|01> - |10>)/sqrt(2) as a projector on C^{d_in} (x) C^{d_in}; needs d_in >= 2.
HermitianOperator antisym_state(std::size_t d_in);

/// Averaged output of the identical boxes for an input with swap expectation
/// `swap_expectation` = <psi|S|psi>, on C^{d_out} (x) C^{d_out}.
HermitianOperator rho_identical(OperationKind kind, std::size_t d_out, std::size_t env,
                                double swap_expectation);
/// Averaged output of two independent boxes: I / d_out^2.
HermitianOperator rho_different(std::size_t d_out);

/// Effect accepting "same": Pi_A = (I - S)/2 for channels, I - T for POVMs.
HermitianOperator accept_same_effect(OperationKind kind, std::size_t d_out);

struct SuccessReport {
  OperationKind kind = OperationKind::channel;
  ComparisonDims dims;
  double p_success = 0.5;
  /// Closed-form value the strategy is expected to reach.
  double p_closed_form = 0.5;
  std::string input_state;
  std::string accept_effect;
};

/// Success probability of the antisymmetric-input / swap-eigenspace strategy,
/// evaluated by pushing the input through the averaged Choi matrices.
SuccessReport optimal_strategy_success(OperationKind kind, const ComparisonDims& dims);

struct SaturationResult {
  double value = 0.0;
  double reference = 0.0;
  double residual = 0.0;
};

/// || Tr_in J (I (x) rho^T) ||_1 for the antisymmetric input, compared with the
/// diamond-norm value (d_out^2 - 1)/(d_out (d_out s - 1)).
SaturationResult saturation_check(const ComparisonDims& dims);

}  // namespace qcompare

#endif  // QCOMPARE_SYMMETRIC_HPP_
