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

// Choi matrices of the averaged two-box channels and the operators derived
// from them: the difference J, its polar decomposition, Tr_out |J| and the
// diamond-norm bound.
//
// Factor ordering of every two-box Choi matrix is (out1, out2, in1, in2).

#ifndef QCOMPARE_CHOI_HPP_
#define QCOMPARE_CHOI_HPP_

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "qcompare/ensembles.hpp"
#include "qcompare/matcore.hpp"

namespace qcompare {

enum class OperationKind { channel, povm };

std::string_view to_string(OperationKind kind);
/// Accepts "channel" or "povm"; throws PreconditionError otherwise.
OperationKind parse_operation_kind(std::string_view text);

/// Choi matrix sum_ij Xi(|i><j|) (x) |i><j| with output factors first.
class ChoiMatrix {
 public:
  ChoiMatrix(std::vector<std::size_t> out_dims, std::vector<std::size_t> in_dims,
             HermitianOperator matrix);

  const std::vector<std::size_t>& out_dims() const noexcept { return out_dims_; }
  const std::vector<std::size_t>& in_dims() const noexcept { return in_dims_; }
  const HermitianOperator& matrix() const noexcept { return matrix_; }

  std::size_t out_dim() const noexcept;
  std::size_t in_dim() const noexcept;
  /// out_dims followed by in_dims.
  std::vector<std::size_t> factor_dims() const;
  std::vector<std::size_t> output_factor_indices() const;
  std::vector<std::size_t> input_factor_indices() const;

  /// Tr over every output factor; equals the identity for trace-preserving maps.
  HermitianOperator trace_outputs() const;
  bool is_trace_preserving(double tolerance = kDefaultTolerance) const;
  bool is_completely_positive(double tolerance = kDefaultTolerance) const;

 private:
  std::vector<std::size_t> out_dims_;
  std::vector<std::size_t> in_dims_;
  HermitianOperator matrix_;
};

using LinearMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// Choi matrix of `action`, a linear map from prod(in_dims)-square to
/// prod(out_dims)-square matrices.
ChoiMatrix choi_of_action(const LinearMap& action, std::vector<std::size_t> in_dims,
                          std::vector<std::size_t> out_dims);
ChoiMatrix choi_of_action(const LinearMap& action, std::size_t d_in, std::size_t d_out);

/// Xi(rho) = Tr_in[J (I_out (x) rho^T)].
ComplexMatrix apply_choi(const ChoiMatrix& j, const ComplexMatrix& rho);
HermitianOperator apply_choi(const ChoiMatrix& j, const HermitianOperator& rho);

/// Choi of the Haar average of Phi_U (x) Phi_U.
ChoiMatrix avg_choi_channels_same(const ComparisonDims& dims);
/// Choi of the Haar average of Phi_U (x) Phi_V with U, V independent: I / d_out^2.
ChoiMatrix avg_choi_diff(std::size_t d_in, std::size_t d_out);
/// Choi of the Haar average of (Delta o Phi_U) (x) (Delta o Phi_U).
ChoiMatrix avg_choi_povm_same(const ComparisonDims& dims);

/// Averaged-same Choi minus averaged-different Choi (J or J_P).
ChoiMatrix diff_operator(OperationKind kind, const ComparisonDims& dims);

/// Applies Delta (x) Delta to the output factors of a two-box Choi matrix.
ChoiMatrix dephase_outputs(const ChoiMatrix& j);

struct PolarResidual {
  /// ||J^2 - (WJ)^2||_F
  double squares = 0.0;
  /// ||WJ - |J| ||_F with |J| from the eigendecomposition
  double direct = 0.0;
  double max() const noexcept { return squares > direct ? squares : direct; }
};

/// Checks that W = S_{d_out} (x) S_{d_in} is the unitary factor of a polar
/// decomposition of the channel difference J.
PolarResidual verify_polar(const ComparisonDims& dims);

/// Closed form of Tr_out |J| (channel) or Tr_out |J_P| (povm) on C^{d_in} (x) C^{d_in}.
HermitianOperator partial_abs_closed_form(OperationKind kind, const ComparisonDims& dims);

/// Tr_out |J| computed from the eigendecomposition of J.
HermitianOperator partial_abs_numeric(const ChoiMatrix& j);

/// || Tr_out |J| ||_op, an upper bound on the diamond norm of the map with Choi J.
double diamond_bound(const ChoiMatrix& j);

/// Throws DegenerateEnsembleError when d_out * env == 1.
void require_nondegenerate(std::size_t d_out, std::size_t env);

}  // namespace qcompare

#endif  // QCOMPARE_CHOI_HPP_
