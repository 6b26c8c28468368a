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

#ifndef QCOMPARE_TESTS_TEST_UTIL_HPP_
#define QCOMPARE_TESTS_TEST_UTIL_HPP_

#include <random>

#include "gtest/gtest.h"
#include "qcompare/matcore.hpp"

namespace qcompare::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen) {
  std::normal_distribution<double> dist;
  ComplexMatrix m(rows, cols);
  for (Complex& z : m.entries()) z = {dist(gen), dist(gen)};
  return m;
}

inline HermitianOperator random_hermitian(std::size_t n, std::mt19937_64& gen) {
  const ComplexMatrix a = random_matrix(n, n, gen);
  return HermitianOperator((a + a.adjoint()) * Complex(0.5));
}

inline HermitianOperator random_density(std::size_t n, std::mt19937_64& gen) {
  const ComplexMatrix a = random_matrix(n, n, gen);
  ComplexMatrix rho = a * a.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return HermitianOperator(std::move(rho));
}

inline ::testing::AssertionResult MatricesNear(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return ::testing::AssertionFailure() << "shape mismatch " << a.rows() << "x" << a.cols() << " vs "
                                         << b.rows() << "x" << b.cols();
  }
  const double dist = frobenius_distance(a, b);
  if (dist <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "Frobenius distance " << dist << " exceeds " << tol;
}

}  // namespace qcompare::testing

#endif  // QCOMPARE_TESTS_TEST_UTIL_HPP_
