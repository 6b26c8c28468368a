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

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "qcompare/errors.hpp"
#include "test_util.hpp"

namespace qcompare {
namespace {

using testing::MatricesNear;

TEST(matcore, KronIdentityAndDiagonal) {
  EXPECT_TRUE(MatricesNear(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                           ComplexMatrix::identity(4), 0.0));
  EXPECT_TRUE(MatricesNear(kron(ComplexMatrix::diagonal({1, 2}), ComplexMatrix::diagonal({3, 4})),
                           ComplexMatrix::diagonal({3, 4, 6, 8}), 0.0));
}

TEST(matcore, KronOfSwapsIsInvolution) {
  const ComplexMatrix s = swap_operator(2).matrix();
  const ComplexMatrix ss = kron(s, s);
  EXPECT_TRUE(MatricesNear(ss * ss, ComplexMatrix::identity(16), 0.0));
}

TEST(matcore, KronRejectsOversizedResult) {
  EXPECT_THROW(kron(ComplexMatrix::identity(100), ComplexMatrix::identity(100)), DimensionError);
  EXPECT_THROW(kron(ComplexMatrix::identity(4), ComplexMatrix::identity(4), 8), DimensionError);
}

TEST(matcore, KronMixedProductAndAssociativity) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_matrix(2, 3, gen);
    const auto b = testing::random_matrix(3, 2, gen);
    const auto c = testing::random_matrix(3, 2, gen);
    const auto d = testing::random_matrix(2, 2, gen);
    const double scale = kron(a * c, b * d).frobenius_norm();
    EXPECT_TRUE(MatricesNear(kron(a, b) * kron(c, d), kron(a * c, b * d), 1e-12 * scale));
    const double scale2 = kron(kron(a, b), d).frobenius_norm();
    EXPECT_TRUE(MatricesNear(kron(kron(a, b), d), kron(a, kron(b, d)), 1e-12 * scale2));
  }
}

TEST(matcore, PartialTraceOfProduct) {
  std::mt19937_64 gen(11);
  const auto a = testing::random_hermitian(2, gen);
  const auto b = testing::random_hermitian(3, gen);
  const auto ab = kron(a, b);
  EXPECT_TRUE(MatricesNear(partial_trace(ab, {2, 3}, {1}).matrix(), (a * b.trace()).matrix(), 1e-12));
  EXPECT_TRUE(MatricesNear(partial_trace(ab, {2, 3}, {0}).matrix(), (b * a.trace()).matrix(), 1e-12));
}

TEST(matcore, PartialTraceExamples) {
  EXPECT_TRUE(MatricesNear(partial_trace(HermitianOperator::identity(4), {2, 2}, {0}).matrix(),
                           ComplexMatrix::identity(2) * Complex(2.0), 0.0));
  // sum_j <i j|S|k j> = sum_j delta_ij delta_jk = delta_ik
  EXPECT_TRUE(MatricesNear(partial_trace(swap_operator(2), {2, 2}, {1}).matrix(), ComplexMatrix::identity(2), 0.0));
}

TEST(matcore, PartialTraceOverAllFactorsIsTrace) {
  std::mt19937_64 gen(3);
  const auto m = testing::random_hermitian(12, gen);
  const auto t = partial_trace(m, {2, 3, 2}, {0, 1, 2});
  ASSERT_EQ(t.dim(), 1u);
  EXPECT_NEAR(t.trace(), m.trace(), 1e-12);
}

TEST(matcore, PartialTraceMiddleFactorKeepsOrder) {
  std::mt19937_64 gen(5);
  const auto a = testing::random_hermitian(2, gen);
  const auto b = testing::random_density(3, gen);
  const auto c = testing::random_hermitian(2, gen);
  const auto abc = kron(kron(a, b), c);
  EXPECT_TRUE(MatricesNear(partial_trace(abc, {2, 3, 2}, {1}).matrix(), kron(a, c).matrix(), 1e-12));
  EXPECT_NEAR(partial_trace(abc, {2, 3, 2}, {0, 2}).trace(), abc.trace(), 1e-12);
}

TEST(matcore, PartialTraceErrors) {
  const auto m = HermitianOperator::identity(4);
  EXPECT_THROW(partial_trace(m, {2, 3}, {0}), DimensionError);
  EXPECT_THROW(partial_trace(m, {2, 2}, {2}), DimensionError);
}

TEST(matcore, SwapOperatorBasics) {
  EXPECT_TRUE(MatricesNear(swap_operator(1).matrix(), ComplexMatrix::identity(1), 0.0));
  const auto s2 = swap_operator(2).matrix();
  const ComplexMatrix expected(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
  EXPECT_TRUE(MatricesNear(s2, expected, 0.0));
  EXPECT_NEAR(swap_operator(3).trace(), 3.0, 0.0);
}

TEST(matcore, SwapIsSelfInverseSelfTransposeWithKnownSpectrum) {
  for (std::size_t a = 1; a <= 4; ++a) {
    const auto s = swap_operator(a).matrix();
    EXPECT_TRUE(MatricesNear(s * s, ComplexMatrix::identity(a * a), 0.0));
    EXPECT_TRUE(MatricesNear(s.transpose(), s, 0.0));
    const auto values = herm_eig(swap_operator(a)).values;
    std::size_t plus = 0, minus = 0;
    for (double v : values) (v > 0 ? plus : minus) += 1;
    EXPECT_EQ(plus, a * (a + 1) / 2);
    EXPECT_EQ(minus, a * (a - 1) / 2);
  }
}

TEST(matcore, DephaseExamples) {
  const auto diag = HermitianOperator::diagonal({1.0, -2.0, 3.5});
  EXPECT_TRUE(MatricesNear(dephase(diag).matrix(), diag.matrix(), 0.0));
  EXPECT_TRUE(MatricesNear(dephase(swap_operator(2)).matrix(), ComplexMatrix::diagonal({1, 0, 0, 1}), 0.0));
}

TEST(matcore, DephaseIsIdempotentAndTracePreserving) {
  std::mt19937_64 gen(19);
  for (int trial = 0; trial < 25; ++trial) {
    const auto m = testing::random_hermitian(1 + trial % 7, gen);
    const auto once = dephase(m);
    EXPECT_NEAR(once.trace(), m.trace(), 1e-12);
    EXPECT_TRUE(MatricesNear(dephase(once).matrix(), once.matrix(), 0.0));
  }
}

TEST(matcore, DephasedSwapIsRankDProjector) {
  EXPECT_TRUE(MatricesNear(dephased_swap(1).matrix(), ComplexMatrix::identity(1), 0.0));
  EXPECT_TRUE(MatricesNear(dephased_swap(2).matrix(), dephase(swap_operator(2)).matrix(), 0.0));
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto t = dephased_swap(d).matrix();
    EXPECT_TRUE(MatricesNear(t * t, t, 0.0));
    EXPECT_NEAR(t.trace().real(), static_cast<double>(d), 0.0);
    std::size_t rank = 0;
    for (double v : herm_eig(dephased_swap(d)).values) rank += v > 0.5;
    EXPECT_EQ(rank, d);
  }
}

TEST(matcore, HermEigExamples) {
  auto values = herm_eig(HermitianOperator::identity(3)).values;
  for (double v : values) EXPECT_NEAR(v, 1.0, 1e-14);

  values = herm_eig(swap_operator(2)).values;
  ASSERT_EQ(values.size(), 4u);
  EXPECT_NEAR(values[0], 1.0, 1e-14);
  EXPECT_NEAR(values[1], 1.0, 1e-14);
  EXPECT_NEAR(values[2], 1.0, 1e-14);
  EXPECT_NEAR(values[3], -1.0, 1e-14);

  values = herm_eig(HermitianOperator::diagonal({5.0, -2.0})).values;
  EXPECT_NEAR(values[0], 5.0, 1e-14);
  EXPECT_NEAR(values[1], -2.0, 1e-14);
}

TEST(matcore, HermEigReconstructs) {
  std::mt19937_64 gen(23);
  for (std::size_t n : {1u, 2u, 5u, 16u, 40u}) {
    const auto m = testing::random_hermitian(n, gen);
    const auto eig = herm_eig(m);
    ComplexMatrix lambda(n, n);
    for (std::size_t k = 0; k < n; ++k) lambda(k, k) = eig.values[k];
    const auto rebuilt = eig.vectors * lambda * eig.vectors.adjoint();
    EXPECT_TRUE(MatricesNear(rebuilt, m.matrix(), 1e-10 * m.matrix().frobenius_norm()));
    for (std::size_t k = 1; k < n; ++k) EXPECT_GE(eig.values[k - 1], eig.values[k]);
  }
}

TEST(matcore, NormsOfShiftedSwap) {
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto id = HermitianOperator::identity(d * d);
    const auto s = swap_operator(d);
    for (double alpha : {0.3, 1.0, 1.7}) {
      const auto m = id * alpha - s;
      const double dd = static_cast<double>(d);
      EXPECT_NEAR(trace_norm(m), std::abs(alpha - 1.0) * dd * (dd + 1) / 2 + (alpha + 1.0) * dd * (dd - 1) / 2, 1e-12);
      EXPECT_NEAR(op_norm(m), 1.0 + alpha, 1e-12);
    }
  }
  EXPECT_TRUE(MatricesNear(abs_herm(HermitianOperator::diagonal({-1.0, 2.0})).matrix(),
                           ComplexMatrix::diagonal({1.0, 2.0}), 1e-14));
}

TEST(matcore, TraceNormDominatesTraceAndAbsDominates) {
  std::mt19937_64 gen(29);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testing::random_hermitian(2 + trial % 6, gen);
    EXPECT_GE(trace_norm(m) + 1e-12, std::abs(m.trace()));
    EXPECT_TRUE(is_positive_semidefinite(abs_herm(m) - m, 1e-10));
    EXPECT_TRUE(is_positive_semidefinite(abs_herm(m), 1e-10));
  }
}

TEST(matcore, HermitianConstructionSymmetrizesOrRejects) {
  ComplexMatrix almost(2, 2, {1.0, Complex(0.5, 1e-14), Complex(0.5, 0.0), 2.0});
  const HermitianOperator h(almost);
  EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));

  ComplexMatrix skew(2, 2, {1.0, 1.0, 0.0, 1.0});
  EXPECT_THROW(HermitianOperator{skew}, PreconditionError);
  EXPECT_THROW(HermitianOperator(ComplexMatrix(2, 3)), DimensionError);
}

TEST(matcore, ComplexMatrixShapeChecks) {
  EXPECT_THROW(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionError);
  EXPECT_THROW(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), DimensionError);
  EXPECT_THROW(ComplexMatrix(2, 2) + ComplexMatrix(3, 3), DimensionError);
}

}  // namespace
}  // namespace qcompare
