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

// Dense complex linear algebra on small matrices: tensor products, partial
// traces, swap/dephasing operators and Hermitian spectral calculus.
//
// Tensor factors are always ordered left to right; factor 0 is the most
// significant index of the row-major layout.

#ifndef QCOMPARE_MATCORE_HPP_
#define QCOMPARE_MATCORE_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qcompare {

using Complex = std::complex<double>;

/// Largest row or column count any constructed matrix may have.
inline constexpr std::size_t kMaxDimension = 4096;

/// Default relative tolerance for operator comparisons (Frobenius norm).
inline constexpr double kDefaultTolerance = 1e-10;

/// Tolerance on max |M - M^dagger| accepted when building a HermitianOperator.
inline constexpr double kHermiticityTolerance = 1e-12;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Complex> entries() noexcept { return data_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  /// Largest entry modulus.
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Frobenius norm of a - b.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Square matrix that equals its adjoint.
///
/// Construction symmetrizes (M + M^dagger)/2 when max |M - M^dagger| is within
/// kHermiticityTolerance (scaled by max(1, max |M_ij|)) and throws
/// PreconditionError otherwise.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(ComplexMatrix m, double tolerance = kHermiticityTolerance);

  static HermitianOperator identity(std::size_t n);
  static HermitianOperator zero(std::size_t n);
  static HermitianOperator diagonal(std::span<const double> values);
  static HermitianOperator diagonal(std::initializer_list<double> values);

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

  double trace() const { return matrix_.trace().real(); }
  /// Tr(this * other), real for Hermitian arguments.
  double expectation(const HermitianOperator& other) const;

  HermitianOperator& operator+=(const HermitianOperator& other);
  HermitianOperator& operator-=(const HermitianOperator& other);
  HermitianOperator& operator*=(double scale);

  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
  friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
  friend HermitianOperator operator*(HermitianOperator a, double s) { return a *= s; }
  friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }

 private:
  ComplexMatrix matrix_;
};

/// Kronecker product. Throws DimensionError when the result would exceed max_dim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t max_dim = kMaxDimension);
HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b,
                       std::size_t max_dim = kMaxDimension);

/// Traces out the factors listed in `traced` from a square matrix on
/// C^{dims[0]} (x) ... (x) C^{dims[k-1]}. Remaining factors keep their order.
/// Tracing every factor yields a 1x1 matrix holding the trace.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> traced);
HermitianOperator partial_trace(const HermitianOperator& m, std::span<const std::size_t> dims,
                                std::span<const std::size_t> traced);
HermitianOperator partial_trace(const HermitianOperator& m, std::initializer_list<std::size_t> dims,
                                std::initializer_list<std::size_t> traced);

/// S on C^a (x) C^a with S|ij> = |ji>.
HermitianOperator swap_operator(std::size_t a);

/// Zeroes every off-diagonal entry.
HermitianOperator dephase(const HermitianOperator& m);
ComplexMatrix dephase(const ComplexMatrix& m);

/// T = sum_i |ii><ii|, the dephased swap on C^d (x) C^d.
HermitianOperator dephased_swap(std::size_t d);

struct Eigensystem {
  /// Descending.
  std::vector<double> values;
  /// Column k is the eigenvector of values[k].
  ComplexMatrix vectors;
};

/// Hermitian eigendecomposition. Throws NumericalError when the
/// reconstruction residual exceeds 1e-10 * ||m||_F.
Eigensystem herm_eig(const HermitianOperator& m);

double trace_norm(const HermitianOperator& m);
double op_norm(const HermitianOperator& m);
/// |m| = V |Lambda| V^dagger.
HermitianOperator abs_herm(const HermitianOperator& m);

/// Smallest eigenvalue is at least -tolerance.
bool is_positive_semidefinite(const HermitianOperator& m, double tolerance = kDefaultTolerance);

}  // namespace qcompare

#endif  // QCOMPARE_MATCORE_HPP_
