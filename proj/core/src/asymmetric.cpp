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

#include "qcompare/asymmetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qcompare/errors.hpp"
#include "qcompare/symmetric.hpp"

namespace qcompare {

namespace {

constexpr double kFeasibilitySlack = 1e-12;

void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw PreconditionError("epsilon must lie in [0, 1], got " + std::to_string(epsilon));
  }
}

void check_unit_interval(double v, const char* name) {
  if (!(v >= -kFeasibilitySlack && v <= 1.0 + kFeasibilitySlack)) {
    throw PreconditionError(std::string("LP coefficient ") + name + " outside [0, 1]: " + std::to_string(v));
  }
}

void check_asymmetric_dims(OperationKind kind, std::size_t d_out, std::size_t env) {
  require_nondegenerate(d_out, env);
  if (kind == OperationKind::channel && d_out < 2) {
    throw PreconditionError("channel coefficients need d_out >= 2");
  }
}

double objective(const LpCoefficients& c, double t_a, double t_s) { return c.c_A * t_a + c.c_S * t_s; }

}  // namespace

void LpCoefficients::validate() const {
  check_unit_interval(alpha, "alpha");
  check_unit_interval(beta, "beta");
  check_unit_interval(c_A, "c_A");
  check_unit_interval(c_S, "c_S");
  if (std::abs(alpha + beta - 1.0) > 1e-12) throw PreconditionError("alpha + beta must equal 1");
  if (std::abs(c_A + c_S - 1.0) > 1e-12) throw PreconditionError("c_A + c_S must equal 1");
}

LpCoefficients coefficients(OperationKind kind, std::size_t d_out, std::size_t env) {
  check_asymmetric_dims(kind, d_out, env);
  const double d = static_cast<double>(d_out);
  const double s = static_cast<double>(env);
  LpCoefficients c;
  if (kind == OperationKind::channel) {
    c.alpha = (s + 1.0) * (d - 1.0) / (2.0 * (s * d - 1.0));
    c.beta = (s - 1.0) * (d + 1.0) / (2.0 * (s * d - 1.0));
    c.c_A = (d - 1.0) / (2.0 * d);
    c.c_S = (d + 1.0) / (2.0 * d);
  } else {
    c.alpha = s * (d - 1.0) / (s * d - 1.0);
    c.beta = (s - 1.0) / (s * d - 1.0);
    c.c_A = (d - 1.0) / d;
    c.c_S = 1.0 / d;
  }
  return c;
}

HermitianOperator projector_a(OperationKind kind, std::size_t d_out) {
  return accept_same_effect(kind, d_out);
}

HermitianOperator projector_s(OperationKind kind, std::size_t d_out) {
  return HermitianOperator::identity(d_out * d_out) - projector_a(kind, d_out);
}

LpCoefficients coefficients_from_states(OperationKind kind, const HermitianOperator& rho_id,
                                        const HermitianOperator& rho_dif) {
  if (rho_id.dim() != rho_dif.dim()) throw DimensionError("output states differ in dimension");
  const auto d_out = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(rho_id.dim()))));
  if (d_out * d_out != rho_id.dim()) throw DimensionError("output state is not on a two-copy space");
  const HermitianOperator pa = projector_a(kind, d_out);
  const HermitianOperator ps = projector_s(kind, d_out);
  return {pa.expectation(rho_id), ps.expectation(rho_id), pa.expectation(rho_dif), ps.expectation(rho_dif)};
}

TradeoffPoint lp_solve(const LpCoefficients& c, double epsilon) {
  check_epsilon(epsilon);
  TradeoffPoint out;
  out.epsilon = epsilon;
  const double need = 1.0 - epsilon;
  if (need <= 0.0) return out;
  if (c.alpha + c.beta < need - kFeasibilitySlack) {
    throw InfeasibleError("type-I cap " + std::to_string(epsilon) + " is infeasible: alpha + beta = " +
                          std::to_string(c.alpha + c.beta));
  }

  // Cost of one unit of constraint along each direction; a zero coefficient
  // makes that direction useless.
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double cost_a = c.alpha > 0.0 ? c.c_A / c.alpha : inf;
  const double cost_s = c.beta > 0.0 ? c.c_S / c.beta : inf;
  const bool a_first = cost_a <= cost_s;

  const double first_coef = a_first ? c.alpha : c.beta;
  const double second_coef = a_first ? c.beta : c.alpha;
  double first = first_coef > 0.0 ? std::min(1.0, need / first_coef) : 0.0;
  double second = 0.0;
  const double remaining = need - first_coef * first;
  if (remaining > 0.0 && second_coef > 0.0) second = std::min(1.0, remaining / second_coef);

  out.t_A = a_first ? first : second;
  out.t_S = a_first ? second : first;
  out.p2_star = objective(c, out.t_A, out.t_S);
  return out;
}

TradeoffPoint lp_brute(const LpCoefficients& c, double epsilon, std::size_t grid_n) {
  check_epsilon(epsilon);
  if (grid_n < 100) throw PreconditionError("lp_brute: grid_n must be at least 100");
  const double need = 1.0 - epsilon;
  const double step = 1.0 / static_cast<double>(grid_n);

  TradeoffPoint best;
  best.epsilon = epsilon;
  best.p2_star = std::numeric_limits<double>::infinity();
  auto consider = [&](double t_a, double t_s) {
    if (c.alpha * t_a + c.beta * t_s < need - kFeasibilitySlack) return;
    const double value = objective(c, t_a, t_s);
    if (value < best.p2_star) {
      best.p2_star = value;
      best.t_A = t_a;
      best.t_S = t_s;
    }
  };

  for (std::size_t i = 0; i <= grid_n; ++i) {
    const double t_a = static_cast<double>(i) * step;
    for (std::size_t j = 0; j <= grid_n; ++j) consider(t_a, static_cast<double>(j) * step);
  }
  // Points where each grid line meets the constraint boundary.
  for (std::size_t i = 0; i <= grid_n; ++i) {
    const double t = static_cast<double>(i) * step;
    if (c.beta > 0.0) {
      const double t_s = (need - c.alpha * t) / c.beta;
      if (t_s >= 0.0 && t_s <= 1.0) consider(t, t_s);
    }
    if (c.alpha > 0.0) {
      const double t_a = (need - c.beta * t) / c.alpha;
      if (t_a >= 0.0 && t_a <= 1.0) consider(t_a, t);
    }
  }
  if (!std::isfinite(best.p2_star)) throw InfeasibleError("lp_brute: no feasible grid point");
  return best;
}

double p2_star(OperationKind kind, std::size_t d_out, std::size_t env, double epsilon) {
  check_epsilon(epsilon);
  const LpCoefficients c = coefficients(kind, d_out, env);
  const double d = static_cast<double>(d_out);
  const double s = static_cast<double>(env);
  const double breakpoint = 1.0 - c.alpha;

  if (kind == OperationKind::channel) {
    if (epsilon >= breakpoint) return (s * d - 1.0) * (1.0 - epsilon) / (d * (s + 1.0));
    // env >= 2 here, since env == 1 gives breakpoint 0.
    return (d - 1.0) / (2.0 * d) + (s * d - 1.0) / (d * (s - 1.0)) * (1.0 - epsilon - c.alpha);
  }
  if (epsilon >= breakpoint) return (s * d - 1.0) / (s * d) * (1.0 - epsilon);
  return 1.0 - (s * d - 1.0) / (d * (s - 1.0)) * epsilon;
}

double tradeoff_lhs(OperationKind kind, std::size_t d_out, std::size_t env, double epsilon) {
  const LpCoefficients c = coefficients(kind, d_out, env);
  const TradeoffPoint point = lp_solve(c, epsilon);
  const double p_type1 = 1.0 - (c.alpha * point.t_A + c.beta * point.t_S);
  return 0.5 * (p_type1 + point.p2_star);
}

TradeoffRelation tradeoff_relation(OperationKind kind, std::size_t d_out, std::size_t env,
                                   std::size_t sweep_points) {
  if (sweep_points < 2) throw PreconditionError("tradeoff_relation: need at least two sweep points");
  const LpCoefficients c = coefficients(kind, d_out, env);
  TradeoffRelation out;
  out.epsilon_sat = 1.0 - c.alpha;
  out.lhs = tradeoff_lhs(kind, d_out, env, out.epsilon_sat);
  out.rhs = 1.0 - p_success(kind, d_out, env);
  out.residual = std::abs(out.lhs - out.rhs);

  out.min_sweep_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < sweep_points; ++k) {
    const double eps = static_cast<double>(k) / static_cast<double>(sweep_points - 1);
    if (std::abs(eps - out.epsilon_sat) < 1e-9) continue;
    const double margin = tradeoff_lhs(kind, d_out, env, eps) - out.rhs;
    out.min_sweep_margin = std::min(out.min_sweep_margin, margin);
  }
  out.sweep_holds = out.min_sweep_margin >= -1e-12;
  return out;
}

}  // namespace qcompare
