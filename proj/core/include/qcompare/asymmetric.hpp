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

// Asymmetric comparison: minimize the type-II error subject to a cap on the
// type-I error, over effects Omega = t_A Pi_A + t_S Pi_S.

#ifndef QCOMPARE_ASYMMETRIC_HPP_
#define QCOMPARE_ASYMMETRIC_HPP_

#include <cstddef>
#include <vector>

#include "qcompare/choi.hpp"
#include "qcompare/matcore.hpp"

namespace qcompare {

/// p_I = 1 - (alpha t_A + beta t_S), p_II = c_A t_A + c_S t_S.
struct LpCoefficients {
  double alpha = 0.0;  ///< Tr(Pi_A rho_id)
  double beta = 0.0;   ///< Tr(Pi_S rho_id)
  double c_A = 0.0;    ///< Tr(Pi_A rho_dif)
  double c_S = 0.0;    ///< Tr(Pi_S rho_dif)

  /// Throws PreconditionError if any coefficient leaves [0,1] or a pair does
  /// not sum to 1 within 1e-12.
  void validate() const;
};

struct TradeoffPoint {
  double epsilon = 0.0;
  double p2_star = 0.0;
  double t_A = 0.0;
  double t_S = 0.0;
};

/// Closed-form coefficients for the antisymmetric input.
LpCoefficients coefficients(OperationKind kind, std::size_t d_out, std::size_t env);

/// Coefficients computed as traces of the projectors against the averaged
/// output states for an arbitrary two-copy input state.
LpCoefficients coefficients_from_states(OperationKind kind, const HermitianOperator& rho_id,
                                        const HermitianOperator& rho_dif);

/// Pi_A and Pi_S for the given kind on C^{d_out} (x) C^{d_out}.
HermitianOperator projector_a(OperationKind kind, std::size_t d_out);
HermitianOperator projector_s(OperationKind kind, std::size_t d_out);

/// min c_A t_A + c_S t_S  s.t.  alpha t_A + beta t_S >= 1 - eps, t in [0,1]^2.
/// Fills the cheaper direction (cost per unit of constraint) first.
/// Throws PreconditionError for eps outside [0,1] and InfeasibleError when
/// alpha + beta < 1 - eps.
TradeoffPoint lp_solve(const LpCoefficients& c, double epsilon);

/// Exhaustive search over a (grid_n+1)^2 grid plus the points of the
/// constraint boundary hit by every grid line. grid_n >= 100.
TradeoffPoint lp_brute(const LpCoefficients& c, double epsilon, std::size_t grid_n);

/// Optimal type-II error as a function of the type-I cap.
double p2_star(OperationKind kind, std::size_t d_out, std::size_t env, double epsilon);

struct TradeoffRelation {
  double epsilon_sat = 0.0;  ///< 1 - alpha
  double lhs = 0.0;          ///< (p_I + p_II)/2 at epsilon_sat
  double rhs = 0.0;          ///< 1 - p_success
  double residual = 0.0;     ///< |lhs - rhs|
  /// min over the sweep of (p_I + p_II)/2 - rhs, excluding epsilon_sat.
  double min_sweep_margin = 0.0;
  bool sweep_holds = true;   ///< lhs >= rhs - 1e-12 at every sweep point
};

/// Evaluates (p_I + p_II)/2 >= 1 - p_success at the breakpoint and on a
/// uniform sweep of `sweep_points` values of eps in [0,1].
TradeoffRelation tradeoff_relation(OperationKind kind, std::size_t d_out, std::size_t env,
                                   std::size_t sweep_points = 1001);

/// (p_I + p_II)/2 for the LP optimum at the given eps.
double tradeoff_lhs(OperationKind kind, std::size_t d_out, std::size_t env, double epsilon);

}  // namespace qcompare

#endif  // QCOMPARE_ASYMMETRIC_HPP_
