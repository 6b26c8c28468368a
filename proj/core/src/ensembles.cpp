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

#include "qcompare/ensembles.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qcompare/errors.hpp"

namespace qcompare {

void ComparisonDims::validate() const {
  if (d_in == 0 || d_out == 0 || env == 0) {
    throw PreconditionError("dimensions must be positive");
  }
  if (env * d_out < d_in) {
    throw PreconditionError("env * d_out must be >= d_in for a trace-preserving channel (got env=" +
                            std::to_string(env) + ", d_out=" + std::to_string(d_out) +
                            ", d_in=" + std::to_string(d_in) + ")");
  }
}

RngStream::RngStream(RngSeed seed, std::uint64_t stream_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.value & 0xffffffffu),
                    static_cast<std::uint32_t>(seed.value >> 32),
                    static_cast<std::uint32_t>(stream_index & 0xffffffffu),
                    static_cast<std::uint32_t>(stream_index >> 32)};
  engine_.seed(seq);
}

double RngStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_normal_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_normal_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

Complex RngStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix haar_unitary(std::size_t d, RngStream& rng) {
  if (d == 0) throw PreconditionError("haar_unitary: dimension must be positive");
  ComplexMatrix g(d, d);
  for (Complex& z : g.entries()) z = rng.complex_normal();

  // Modified Gram-Schmidt on columns. The triangular factor has r_kk = ||q_k|| > 0,
  // which is exactly the phase convention that makes Q Haar distributed.
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex proj = 0.0;
      for (std::size_t r = 0; r < d; ++r) proj += std::conj(g(r, j)) * g(r, k);
      for (std::size_t r = 0; r < d; ++r) g(r, k) -= proj * g(r, j);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < d; ++r) norm += std::norm(g(r, k));
    norm = std::sqrt(norm);
    if (norm < 1e-300) throw NumericalError("haar_unitary: rank-deficient Ginibre sample", norm);
    for (std::size_t r = 0; r < d; ++r) g(r, k) /= norm;
  }
  return g;
}

Isometry::Isometry(ComparisonDims dims, ComplexMatrix m, double tolerance)
    : dims_(dims), matrix_(std::move(m)) {
  dims_.validate();
  if (matrix_.rows() != dims_.dilation_dim() || matrix_.cols() != dims_.d_in) {
    throw PreconditionError("isometry shape must be (d_out*env) x d_in");
  }
  const ComplexMatrix gram = matrix_.adjoint() * matrix_;
  const double err = (gram - ComplexMatrix::identity(dims_.d_in)).max_abs();
  if (err > tolerance) {
    throw PreconditionError("matrix is not an isometry: max |U^dagger U - I| = " + std::to_string(err));
  }
}

Isometry haar_isometry(const ComparisonDims& dims, RngStream& rng) {
  dims.validate();
  const std::size_t n = dims.dilation_dim();
  const ComplexMatrix full = haar_unitary(n, rng);
  ComplexMatrix cols(n, dims.d_in);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < dims.d_in; ++c) cols(r, c) = full(r, c);
  return Isometry(dims, std::move(cols));
}

ComplexMatrix stinespring_map(const Isometry& u, const ComplexMatrix& x) {
  const auto& dims = u.dims();
  if (x.rows() != dims.d_in || x.cols() != dims.d_in) {
    throw DimensionError("stinespring_map: input must be d_in x d_in");
  }
  const ComplexMatrix y = u.matrix() * x * u.matrix().adjoint();
  const std::array<std::size_t, 2> factors{dims.d_out, dims.env};
  const std::array<std::size_t, 1> traced{1};
  return partial_trace(y, factors, traced);
}

ComplexMatrix stinespring_pair_map(const Isometry& u, const Isometry& v, const ComplexMatrix& x) {
  if (!(u.dims() == v.dims())) throw DimensionError("stinespring_pair_map: isometry dims differ");
  const auto& dims = u.dims();
  const std::size_t in = dims.d_in * dims.d_in;
  if (x.rows() != in || x.cols() != in) {
    throw DimensionError("stinespring_pair_map: input must be d_in^2 x d_in^2");
  }
  const ComplexMatrix w = kron(u.matrix(), v.matrix());
  const ComplexMatrix y = w * x * w.adjoint();
  const std::array<std::size_t, 4> factors{dims.d_out, dims.env, dims.d_out, dims.env};
  const std::array<std::size_t, 2> traced{1, 3};
  return partial_trace(y, factors, traced);
}

HermitianOperator apply_channel(const Isometry& u, const HermitianOperator& rho) {
  if (rho.dim() != u.dims().d_in) {
    throw DimensionError("apply_channel: state dimension " + std::to_string(rho.dim()) +
                         " does not match d_in " + std::to_string(u.dims().d_in));
  }
  if (std::abs(rho.trace() - 1.0) > kDefaultTolerance) {
    throw PreconditionError("apply_channel: state must have unit trace");
  }
  if (!is_positive_semidefinite(rho)) {
    throw PreconditionError("apply_channel: state must be positive semidefinite");
  }
  return HermitianOperator(stinespring_map(u, rho.matrix()));
}

std::vector<HermitianOperator> povm_effects(const Isometry& u) {
  const auto& dims = u.dims();
  const ComplexMatrix& m = u.matrix();
  std::vector<HermitianOperator> effects;
  effects.reserve(dims.d_out);
  for (std::size_t i = 0; i < dims.d_out; ++i) {
    // U^dagger P U where P keeps rows i*env .. i*env+env-1.
    ComplexMatrix e(dims.d_in, dims.d_in);
    for (std::size_t a = 0; a < dims.d_in; ++a)
      for (std::size_t b = 0; b < dims.d_in; ++b) {
        Complex sum = 0.0;
        for (std::size_t k = 0; k < dims.env; ++k) {
          const std::size_t row = i * dims.env + k;
          sum += std::conj(m(row, a)) * m(row, b);
        }
        e(a, b) = sum;
      }
    effects.emplace_back(std::move(e));
  }
  return effects;
}

HermitianOperator apply_povm_channel(const Isometry& u, const HermitianOperator& rho) {
  return dephase(apply_channel(u, rho));
}

}  // namespace qcompare
