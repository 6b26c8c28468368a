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

#include "qcompare/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "qcompare/errors.hpp"

namespace qcompare {

namespace {

void check_dimension(std::size_t rows, std::size_t cols, std::size_t max_dim) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  if (rows > max_dim || cols > max_dim) {
    throw DimensionError("matrix dimension " + std::to_string(std::max(rows, cols)) +
                         " exceeds the configured maximum " + std::to_string(max_dim));
  }
}

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  check_dimension(rows, cols, kMaxDimension);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  check_dimension(rows, cols, kMaxDimension);
  if (data_.size() != rows * cols) {
    throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (const Complex& z : data_) best = std::max(best, std::abs(z));
  return best;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  check_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  check_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: inner dimensions " + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + " differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex lhs = a(r, k);
      if (lhs == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += lhs * b(k, c);
    }
  }
  return out;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "frobenius_distance");
  double sum = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) sum += std::norm(ea[i] - eb[i]);
  return std::sqrt(sum);
}

// HermitianOperator

HermitianOperator::HermitianOperator(ComplexMatrix m, double tolerance) {
  if (!m.is_square()) {
    throw DimensionError("Hermitian operator must be square, got " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()));
  }
  const double scale = std::max(1.0, m.max_abs());
  double asym = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c)
      asym = std::max(asym, std::abs(m(r, c) - std::conj(m(c, r))));
  if (asym > tolerance * scale) {
    throw PreconditionError("matrix is not Hermitian: max |M - M^dagger| = " +
                            std::to_string(asym));
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    m(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < m.cols(); ++c) {
      const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      m(r, c) = avg;
      m(c, r) = std::conj(avg);
    }
  }
  matrix_ = std::move(m);
}

HermitianOperator HermitianOperator::identity(std::size_t n) {
  return HermitianOperator(ComplexMatrix::identity(n));
}

HermitianOperator HermitianOperator::zero(std::size_t n) { return HermitianOperator(ComplexMatrix(n, n)); }

HermitianOperator HermitianOperator::diagonal(std::span<const double> values) {
  return HermitianOperator(ComplexMatrix::diagonal(values));
}

HermitianOperator HermitianOperator::diagonal(std::initializer_list<double> values) {
  return HermitianOperator(ComplexMatrix::diagonal(values));
}

double HermitianOperator::expectation(const HermitianOperator& other) const {
  if (dim() != other.dim()) throw DimensionError("expectation: dimension mismatch");
  // Tr(AB) = sum_{ij} A_ij B_ji
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) sum += matrix_(i, j) * other.matrix_(j, i);
  return sum.real();
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
  matrix_ += other.matrix_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& other) {
  matrix_ -= other.matrix_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double scale) {
  matrix_ *= scale;
  return *this;
}

// Tensor structure

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_dim) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  check_dimension(rows, cols, max_dim);
  ComplexMatrix out(rows, cols);
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex x = a(ar, ac);
      if (x == Complex{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
    }
  return out;
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b, std::size_t max_dim) {
  return HermitianOperator(kron(a.matrix(), b.matrix(), max_dim));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> traced) {
  if (!m.is_square()) throw DimensionError("partial_trace: matrix must be square");
  if (dims.empty()) throw DimensionError("partial_trace: empty factor list");
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw DimensionError("partial_trace: factor dimensions must be positive");
    total *= d;
  }
  if (total != m.rows()) {
    throw DimensionError("partial_trace: factor dimensions multiply to " + std::to_string(total) +
                         " but the matrix has dimension " + std::to_string(m.rows()));
  }
  std::vector<bool> is_traced(dims.size(), false);
  for (std::size_t idx : traced) {
    if (idx >= dims.size()) {
      throw DimensionError("partial_trace: factor index " + std::to_string(idx) + " out of range");
    }
    is_traced[idx] = true;
  }

  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
  for (std::size_t k = 0; k < dims.size(); ++k) (is_traced[k] ? traced_dim : kept_dim) *= dims[k];

  // full_index[kept * traced_dim + t] is the row index of the composite basis state.
  std::vector<std::size_t> full_index(total);
  for (std::size_t full = 0; full < total; ++full) {
    std::size_t rem = full;
    std::size_t kept = 0, t = 0, kept_stride = 1, traced_stride = 1;
    for (std::size_t k = dims.size(); k-- > 0;) {
      const std::size_t digit = rem % dims[k];
      rem /= dims[k];
      if (is_traced[k]) {
        t += digit * traced_stride;
        traced_stride *= dims[k];
      } else {
        kept += digit * kept_stride;
        kept_stride *= dims[k];
      }
    }
    full_index[kept * traced_dim + t] = full;
  }

  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t a = 0; a < kept_dim; ++a)
    for (std::size_t b = 0; b < kept_dim; ++b) {
      Complex sum = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t)
        sum += m(full_index[a * traced_dim + t], full_index[b * traced_dim + t]);
      out(a, b) = sum;
    }
  return out;
}

HermitianOperator partial_trace(const HermitianOperator& m, std::span<const std::size_t> dims,
                                std::span<const std::size_t> traced) {
  return HermitianOperator(partial_trace(m.matrix(), dims, traced));
}

HermitianOperator partial_trace(const HermitianOperator& m, std::initializer_list<std::size_t> dims,
                                std::initializer_list<std::size_t> traced) {
  return partial_trace(m, std::span<const std::size_t>(dims.begin(), dims.size()),
                       std::span<const std::size_t>(traced.begin(), traced.size()));
}

HermitianOperator swap_operator(std::size_t a) {
  if (a == 0) throw PreconditionError("swap_operator: dimension must be positive");
  ComplexMatrix s(a * a, a * a);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) s(j * a + i, i * a + j) = 1.0;
  return HermitianOperator(std::move(s));
}

ComplexMatrix dephase(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("dephase: matrix must be square");
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) = m(i, i);
  return out;
}

HermitianOperator dephase(const HermitianOperator& m) { return HermitianOperator(dephase(m.matrix())); }

HermitianOperator dephased_swap(std::size_t d) {
  if (d == 0) throw PreconditionError("dephased_swap: dimension must be positive");
  ComplexMatrix t(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) t(i * d + i, i * d + i) = 1.0;
  return HermitianOperator(std::move(t));
}

// Spectral calculus

Eigensystem herm_eig(const HermitianOperator& m) {
  const std::size_t n = m.dim();
  if (n == 0) return {};
  Eigen::Map<const EigenMatrix> view(m.matrix().entries().data(), n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(view);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("herm_eig: eigensolver did not converge", std::nan(""));
  }
  // Eigen returns ascending order; flip to descending.
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  Eigensystem out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto src = static_cast<Eigen::Index>(n - 1 - k);
    out.values[k] = values(src);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = vectors(static_cast<Eigen::Index>(r), src);
  }

  const Eigen::MatrixXcd rebuilt = vectors * values.asDiagonal() * vectors.adjoint();
  const double residual = (rebuilt - view).norm();
  const double scale = view.norm();
  if (residual > 1e-10 * std::max(scale, 1e-300) && residual > 1e-300) {
    throw NumericalError("herm_eig: reconstruction residual above 1e-10 * ||m||_F", residual);
  }
  return out;
}

double trace_norm(const HermitianOperator& m) {
  double sum = 0.0;
  for (double v : herm_eig(m).values) sum += std::abs(v);
  return sum;
}

double op_norm(const HermitianOperator& m) {
  const auto values = herm_eig(m).values;
  if (values.empty()) return 0.0;
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

HermitianOperator abs_herm(const HermitianOperator& m) {
  const Eigensystem eig = herm_eig(m);
  const std::size_t n = m.dim();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = std::abs(eig.values[k]);
    if (w == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = w * eig.vectors(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(eig.vectors(c, k));
    }
  }
  return HermitianOperator(std::move(out));
}

bool is_positive_semidefinite(const HermitianOperator& m, double tolerance) {
  const auto values = herm_eig(m).values;
  return values.empty() || values.back() >= -tolerance;
}

}  // namespace qcompare
