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

#include "qcompare/symmetric.hpp"

#include <cmath>
#include <string>

#include "qcompare/errors.hpp"

namespace qcompare {

double p_success_channels(std::size_t d_out, std::size_t env) {
  require_nondegenerate(d_out, env);
  const double d = static_cast<double>(d_out);
  const double s = static_cast<double>(env);
  return 0.5 + 0.25 * (d * d - 1.0) / (d * d * s - d);
}

double p_success_povm(std::size_t d_out, std::size_t env) {
  if (d_out == 1 && env >= 1) return 0.5;
  require_nondegenerate(d_out, env);
  const double d = static_cast<double>(d_out);
  const double s = static_cast<double>(env);
  return 0.5 + 0.5 * (d - 1.0) / (d * (s * d - 1.0));
}

double p_success(OperationKind kind, std::size_t d_out, std::size_t env) {
  return kind == OperationKind::channel ? p_success_channels(d_out, env) : p_success_povm(d_out, env);
}

double p_success_trivial_input(std::size_t d_out, std::size_t env) {
  if (d_out == 0 || env == 0) throw PreconditionError("d_out and env must be positive");
  const double d = static_cast<double>(d_out);
  const double s = static_cast<double>(env);
  return 0.5 + 0.25 * (d * d - 1.0) / (d * (d * s + 1.0));
}

EnvDistribution::EnvDistribution(std::vector<std::pair<std::size_t, double>> support)
    : support_(std::move(support)) {
  if (support_.empty()) throw PreconditionError("environment distribution has empty support");
  double total = 0.0;
  for (const auto& [env, weight] : support_) {
    if (env == 0) throw PreconditionError("environment sizes must be positive");
    if (!(weight >= 0.0)) throw PreconditionError("environment weights must be nonnegative");
    total += weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw PreconditionError("environment weights sum to " + std::to_string(total) + ", not 1");
  }
}

EnvDistribution EnvDistribution::point_mass(std::size_t env) { return EnvDistribution({{env, 1.0}}); }

EnvDistribution EnvDistribution::hilbert_schmidt(std::size_t d_in, std::size_t d_out) {
  return point_mass(d_in * d_out);
}

double averaged_p(OperationKind kind, std::size_t d_out, const EnvDistribution& pi) {
  if (kind == OperationKind::povm && d_out == 1) return 0.5;
  const double d = static_cast<double>(d_out);
  double expectation = 0.0;
  for (const auto& [env, weight] : pi.support()) {
    require_nondegenerate(d_out, env);
    expectation += weight / (static_cast<double>(env) * d - 1.0);
  }
  if (kind == OperationKind::channel) return 0.5 + 0.25 * ((d * d - 1.0) / d) * expectation;
  return 0.5 + 0.5 * ((d - 1.0) / d) * expectation;
}

HermitianOperator antisym_state(std::size_t d_in) {
  if (d_in < 2) throw PreconditionError("antisym_state: needs d_in >= 2");
  ComplexMatrix m(d_in * d_in, d_in * d_in);
  const std::size_t k01 = 1;      // |0>|1>
  const std::size_t k10 = d_in;   // |1>|0>
  m(k01, k01) = 0.5;
  m(k10, k10) = 0.5;
  m(k01, k10) = -0.5;
  m(k10, k01) = -0.5;
  return HermitianOperator(std::move(m));
}

HermitianOperator rho_identical(OperationKind kind, std::size_t d_out, std::size_t env,
                                double swap_expectation) {
  require_nondegenerate(d_out, env);
  if (!(swap_expectation >= -1.0 - 1e-12 && swap_expectation <= 1.0 + 1e-12)) {
    throw PreconditionError("swap expectation must lie in [-1, 1]");
  }
  const double d = static_cast<double>(d_out);
  const double s = static_cast<double>(env);
  const double denom = d * (s * s * d * d - 1.0);
  const HermitianOperator x = kind == OperationKind::channel ? swap_operator(d_out) : dephased_swap(d_out);
  HermitianOperator rho = HermitianOperator::identity(d_out * d_out) * (s * (s * d - swap_expectation) / denom);
  rho += x * ((s * d * swap_expectation - 1.0) / denom);
  return rho;
}

HermitianOperator rho_different(std::size_t d_out) {
  if (d_out == 0) throw PreconditionError("d_out must be positive");
  return HermitianOperator::identity(d_out * d_out) * (1.0 / static_cast<double>(d_out * d_out));
}

HermitianOperator accept_same_effect(OperationKind kind, std::size_t d_out) {
  const HermitianOperator id = HermitianOperator::identity(d_out * d_out);
  if (kind == OperationKind::channel) return (id - swap_operator(d_out)) * 0.5;
  return id - dephased_swap(d_out);
}

SuccessReport optimal_strategy_success(OperationKind kind, const ComparisonDims& dims) {
  dims.validate();
  if (dims.d_in < 2) throw PreconditionError("optimal_strategy_success: needs d_in >= 2");
  require_nondegenerate(dims.d_out, dims.env);

  const HermitianOperator input = antisym_state(dims.d_in);
  const ChoiMatrix same =
      kind == OperationKind::channel ? avg_choi_channels_same(dims) : avg_choi_povm_same(dims);
  const HermitianOperator rho_id = apply_choi(same, input);
  const HermitianOperator rho_dif = apply_choi(avg_choi_diff(dims.d_in, dims.d_out), input);
  const HermitianOperator omega = accept_same_effect(kind, dims.d_out);

  SuccessReport report;
  report.kind = kind;
  report.dims = dims;
  report.p_success = 0.5 * omega.expectation(rho_id) + 0.5 * (1.0 - omega.expectation(rho_dif));
  report.p_closed_form = p_success(kind, dims.d_out, dims.env);
  report.input_state = "antisymmetric (|01>-|10>)/sqrt2";
  report.accept_effect = kind == OperationKind::channel ? "Pi_A=(I-S)/2" : "I-T";
  return report;
}

SaturationResult saturation_check(const ComparisonDims& dims) {
  dims.validate();
  if (dims.d_in < 2) throw PreconditionError("saturation_check: needs d_in >= 2");
  const ChoiMatrix j = diff_operator(OperationKind::channel, dims);
  const HermitianOperator reduced = apply_choi(j, antisym_state(dims.d_in));

  const double d = static_cast<double>(dims.d_out);
  const double s = static_cast<double>(dims.env);
  SaturationResult out;
  out.value = trace_norm(reduced);
  out.reference = (d * d - 1.0) / (d * (d * s - 1.0));
  out.residual = std::abs(out.value - out.reference);
  return out;
}

}  // namespace qcompare
