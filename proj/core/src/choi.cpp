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

#include "qcompare/choi.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "qcompare/errors.hpp"

namespace qcompare {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

ComplexMatrix scaled(const HermitianOperator& m, double factor) { return m.matrix() * Complex(factor); }

void check_two_box(const ComparisonDims& dims) {
  dims.validate();
  require_nondegenerate(dims.d_out, dims.env);
}

}  // namespace

std::string_view to_string(OperationKind kind) {
  return kind == OperationKind::channel ? "channel" : "povm";
}

OperationKind parse_operation_kind(std::string_view text) {
  if (text == "channel") return OperationKind::channel;
  if (text == "povm") return OperationKind::povm;
  throw PreconditionError("unknown operation kind '" + std::string(text) + "' (expected channel or povm)");
}

void require_nondegenerate(std::size_t d_out, std::size_t env) {
  if (d_out == 0 || env == 0) throw PreconditionError("d_out and env must be positive");
  if (d_out * env == 1) {
    throw DegenerateEnsembleError(
        "degenerate ensemble: d_out = env = 1 is a single deterministic channel");
  }
}

// ChoiMatrix

ChoiMatrix::ChoiMatrix(std::vector<std::size_t> out_dims, std::vector<std::size_t> in_dims,
                       HermitianOperator matrix)
    : out_dims_(std::move(out_dims)), in_dims_(std::move(in_dims)), matrix_(std::move(matrix)) {
  if (out_dims_.empty() || in_dims_.empty()) throw DimensionError("Choi matrix needs input and output factors");
  if (product(out_dims_) * product(in_dims_) != matrix_.dim()) {
    throw DimensionError("Choi factor dimensions do not match the matrix dimension " +
                         std::to_string(matrix_.dim()));
  }
}

std::size_t ChoiMatrix::out_dim() const noexcept { return product(out_dims_); }
std::size_t ChoiMatrix::in_dim() const noexcept { return product(in_dims_); }

std::vector<std::size_t> ChoiMatrix::factor_dims() const {
  std::vector<std::size_t> all = out_dims_;
  all.insert(all.end(), in_dims_.begin(), in_dims_.end());
  return all;
}

std::vector<std::size_t> ChoiMatrix::output_factor_indices() const {
  std::vector<std::size_t> idx(out_dims_.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

std::vector<std::size_t> ChoiMatrix::input_factor_indices() const {
  std::vector<std::size_t> idx(in_dims_.size());
  std::iota(idx.begin(), idx.end(), out_dims_.size());
  return idx;
}

HermitianOperator ChoiMatrix::trace_outputs() const {
  const auto dims = factor_dims();
  const auto traced = output_factor_indices();
  return partial_trace(matrix_, dims, traced);
}

bool ChoiMatrix::is_trace_preserving(double tolerance) const {
  const HermitianOperator reduced = trace_outputs();
  const ComplexMatrix id = ComplexMatrix::identity(reduced.dim());
  return frobenius_distance(reduced.matrix(), id) <= tolerance * std::max(1.0, id.frobenius_norm());
}

bool ChoiMatrix::is_completely_positive(double tolerance) const {
  return is_positive_semidefinite(matrix_, tolerance);
}

// Constructions

ChoiMatrix choi_of_action(const LinearMap& action, std::vector<std::size_t> in_dims,
                          std::vector<std::size_t> out_dims) {
  const std::size_t din = product(in_dims);
  const std::size_t dout = product(out_dims);
  ComplexMatrix j(dout * din, dout * din);
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t k = 0; k < din; ++k) {
      ComplexMatrix unit(din, din);
      unit(i, k) = 1.0;
      const ComplexMatrix image = action(unit);
      if (image.rows() != dout || image.cols() != dout) {
        throw DimensionError("choi_of_action: action returned a " + std::to_string(image.rows()) +
                             "x" + std::to_string(image.cols()) + " matrix, expected " +
                             std::to_string(dout));
      }
      for (std::size_t a = 0; a < dout; ++a)
        for (std::size_t b = 0; b < dout; ++b) j(a * din + i, b * din + k) = image(a, b);
    }
  return ChoiMatrix(std::move(out_dims), std::move(in_dims), HermitianOperator(std::move(j), 1e-10));
}

ChoiMatrix choi_of_action(const LinearMap& action, std::size_t d_in, std::size_t d_out) {
  return choi_of_action(action, std::vector<std::size_t>{d_in}, std::vector<std::size_t>{d_out});
}

ComplexMatrix apply_choi(const ChoiMatrix& j, const ComplexMatrix& rho) {
  const std::size_t din = j.in_dim();
  const std::size_t dout = j.out_dim();
  if (rho.rows() != din || rho.cols() != din) throw DimensionError("apply_choi: input dimension mismatch");
  const ComplexMatrix& m = j.matrix().matrix();
  ComplexMatrix out(dout, dout);
  for (std::size_t a = 0; a < dout; ++a)
    for (std::size_t b = 0; b < dout; ++b) {
      Complex sum = 0.0;
      for (std::size_t i = 0; i < din; ++i)
        for (std::size_t k = 0; k < din; ++k) sum += m(a * din + i, b * din + k) * rho(i, k);
      out(a, b) = sum;
    }
  return out;
}

HermitianOperator apply_choi(const ChoiMatrix& j, const HermitianOperator& rho) {
  return HermitianOperator(apply_choi(j, rho.matrix()));
}

ChoiMatrix avg_choi_channels_same(const ComparisonDims& dims) {
  check_two_box(dims);
  const double s = static_cast<double>(dims.env);
  const double ds = static_cast<double>(dims.d_out * dims.env);
  const double denom = ds * ds - 1.0;

  const HermitianOperator id_out = HermitianOperator::identity(dims.d_out * dims.d_out);
  const HermitianOperator id_in = HermitianOperator::identity(dims.d_in * dims.d_in);
  const HermitianOperator swap_out = swap_operator(dims.d_out);
  const HermitianOperator swap_in = swap_operator(dims.d_in);

  ComplexMatrix j = scaled(kron(id_out, id_in), s * s / denom);
  j += scaled(kron(swap_out, swap_in), s / denom);
  j -= scaled(kron(id_out, swap_in), s * s / (ds * denom));
  j -= scaled(kron(swap_out, id_in), s / (ds * denom));
  return ChoiMatrix({dims.d_out, dims.d_out}, {dims.d_in, dims.d_in}, HermitianOperator(std::move(j)));
}

ChoiMatrix avg_choi_diff(std::size_t d_in, std::size_t d_out) {
  if (d_in == 0 || d_out == 0) throw PreconditionError("avg_choi_diff: dimensions must be positive");
  const std::size_t n = d_out * d_out * d_in * d_in;
  HermitianOperator j = HermitianOperator::identity(n) * (1.0 / static_cast<double>(d_out * d_out));
  return ChoiMatrix({d_out, d_out}, {d_in, d_in}, std::move(j));
}

ChoiMatrix avg_choi_povm_same(const ComparisonDims& dims) {
  check_two_box(dims);
  const double s = static_cast<double>(dims.env);
  const double sd = static_cast<double>(dims.d_out * dims.env);
  const double pref = s / (sd * sd - 1.0);

  const HermitianOperator id_out = HermitianOperator::identity(dims.d_out * dims.d_out);
  const HermitianOperator id_in = HermitianOperator::identity(dims.d_in * dims.d_in);
  const HermitianOperator t_out = dephased_swap(dims.d_out);
  const HermitianOperator swap_in = swap_operator(dims.d_in);

  ComplexMatrix j = scaled(kron(id_out, id_in), pref * s);
  j += scaled(kron(t_out, swap_in), pref);
  j -= scaled(kron(id_out, swap_in), pref * s / sd);
  j -= scaled(kron(t_out, id_in), pref / sd);
  return ChoiMatrix({dims.d_out, dims.d_out}, {dims.d_in, dims.d_in}, HermitianOperator(std::move(j)));
}

ChoiMatrix diff_operator(OperationKind kind, const ComparisonDims& dims) {
  const ChoiMatrix same =
      kind == OperationKind::channel ? avg_choi_channels_same(dims) : avg_choi_povm_same(dims);
  const ChoiMatrix diff = avg_choi_diff(dims.d_in, dims.d_out);
  return ChoiMatrix(same.out_dims(), same.in_dims(), same.matrix() - diff.matrix());
}

ChoiMatrix dephase_outputs(const ChoiMatrix& j) {
  // Delta on every output factor keeps entries whose output row and column
  // indices coincide.
  const std::size_t din = j.in_dim();
  const std::size_t dout = j.out_dim();
  const ComplexMatrix& m = j.matrix().matrix();
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t a = 0; a < dout; ++a)
    for (std::size_t i = 0; i < din; ++i)
      for (std::size_t k = 0; k < din; ++k) out(a * din + i, a * din + k) = m(a * din + i, a * din + k);
  return ChoiMatrix(j.out_dims(), j.in_dims(), HermitianOperator(std::move(out)));
}

PolarResidual verify_polar(const ComparisonDims& dims) {
  const ChoiMatrix j = diff_operator(OperationKind::channel, dims);
  const ComplexMatrix w = kron(swap_operator(dims.d_out).matrix(), swap_operator(dims.d_in).matrix());
  const ComplexMatrix& jm = j.matrix().matrix();
  const ComplexMatrix wj = w * jm;

  PolarResidual res;
  res.squares = frobenius_distance(jm * jm, wj * wj);
  res.direct = frobenius_distance(wj, abs_herm(j.matrix()).matrix());
  return res;
}

HermitianOperator partial_abs_closed_form(OperationKind kind, const ComparisonDims& dims) {
  check_two_box(dims);
  const double d = static_cast<double>(dims.d_out);
  const double s = static_cast<double>(dims.env);
  const double pref = kind == OperationKind::channel
                          ? (d * d - 1.0) / (d * (s * s * d * d - 1.0))
                          : 2.0 * (d - 1.0) / (d * (s * s * d * d - 1.0));
  HermitianOperator out = HermitianOperator::identity(dims.d_in * dims.d_in) * (s * d);
  out -= swap_operator(dims.d_in);
  return out * pref;
}

HermitianOperator partial_abs_numeric(const ChoiMatrix& j) {
  const auto dims = j.factor_dims();
  const auto traced = j.output_factor_indices();
  return partial_trace(abs_herm(j.matrix()), dims, traced);
}

double diamond_bound(const ChoiMatrix& j) { return op_norm(partial_abs_numeric(j)); }

}  // namespace qcompare
