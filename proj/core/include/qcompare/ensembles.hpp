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

// Haar-Stinespring ensembles: Haar unitaries, truncated-unitary isometries and
// the random channels and POVMs they induce.

#ifndef QCOMPARE_ENSEMBLES_HPP_
#define QCOMPARE_ENSEMBLES_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "qcompare/matcore.hpp"

namespace qcompare {

/// Input dimension, output dimension and environment (Stinespring extension)
/// size of the isometry ensemble. Requires env * d_out >= d_in.
struct ComparisonDims {
  std::size_t d_in = 1;
  std::size_t d_out = 1;
  std::size_t env = 1;

  /// Throws PreconditionError unless every dimension is positive and
  /// env * d_out >= d_in.
  void validate() const;
  std::size_t dilation_dim() const noexcept { return d_out * env; }

  friend bool operator==(const ComparisonDims&, const ComparisonDims&) = default;
};

struct RngSeed {
  std::uint64_t value = 0;
};

/// Deterministic random stream: mt19937_64 seeded through std::seed_seq from
/// (seed, stream index). Normals use Box-Muller on 53-bit uniforms, so the
/// stream is identical across platforms and standard libraries.
class RngStream {
 public:
  static constexpr std::string_view kGeneratorId = "mt19937_64/seed_seq-split/box-muller";

  explicit RngStream(RngSeed seed, std::uint64_t stream_index = 0);

  /// Uniform on [0, 1).
  double uniform();
  double normal();
  /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

/// Haar-distributed d x d unitary (Ginibre matrix, Gram-Schmidt QR, phases of
/// the triangular diagonal fixed to be positive).
ComplexMatrix haar_unitary(std::size_t d, RngStream& rng);

/// U : C^{d_in} -> C^{d_out} (x) C^{env}; output factor first.
class Isometry {
 public:
  /// Throws PreconditionError unless m has shape (d_out*env) x d_in and
  /// ||U^dagger U - I||_max <= tolerance.
  Isometry(ComparisonDims dims, ComplexMatrix m, double tolerance = 1e-12);

  const ComparisonDims& dims() const noexcept { return dims_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  ComparisonDims dims_;
  ComplexMatrix matrix_;
};

/// First d_in columns of a Haar unitary of size d_out*env.
Isometry haar_isometry(const ComparisonDims& dims, RngStream& rng);

/// Tr_env(U X U^dagger) for an arbitrary d_in x d_in matrix X.
ComplexMatrix stinespring_map(const Isometry& u, const ComplexMatrix& x);

/// (Phi_U (x) Phi_V)(X) for X on C^{d_in} (x) C^{d_in}; output on
/// C^{d_out} (x) C^{d_out}. Pass the same isometry twice for the "same" case.
ComplexMatrix stinespring_pair_map(const Isometry& u, const Isometry& v, const ComplexMatrix& x);

/// Phi_U^{(s)}(rho). Requires rho to be a density matrix of dimension d_in
/// (positive semidefinite within 1e-10, unit trace within 1e-10).
HermitianOperator apply_channel(const Isometry& u, const HermitianOperator& rho);

/// M_i = U^dagger (|i><i| (x) I_env) U, i = 0..d_out-1.
std::vector<HermitianOperator> povm_effects(const Isometry& u);

/// Delta(Phi_U(rho)): diagonal holds the outcome probabilities Tr(M_i rho).
HermitianOperator apply_povm_channel(const Isometry& u, const HermitianOperator& rho);

}  // namespace qcompare

#endif  // QCOMPARE_ENSEMBLES_HPP_
