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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qcompare/qcompare.hpp"

namespace {

using namespace qcompare;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct GridCell {
  std::size_t d_in, d_out, env;
};

// d_in in {1,2,3}, d_out in {2,3}, s in {1,2,3}; cells with env * d_out < d_in
// admit no isometry and are skipped.
std::vector<GridCell> dimension_grid(std::size_t min_d_in) {
  std::vector<GridCell> cells;
  for (std::size_t d_in = min_d_in; d_in <= 3; ++d_in)
    for (std::size_t d_out = 2; d_out <= 3; ++d_out)
      for (std::size_t env = 1; env <= 3; ++env)
        if (env * d_out >= d_in) cells.push_back({d_in, d_out, env});
  return cells;
}

std::string cell_name(const GridCell& c) {
  return "(" + std::to_string(c.d_in) + "," + std::to_string(c.d_out) + "," + std::to_string(c.env) + ")";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome landmark() {
  const double p = p_success_channels(2, 1);
  return {std::abs(p - 0.875) <= 1e-12, "p=" + fmt(p)};
}

Outcome diamond_identity() {
  Outcome out;
  std::size_t failed = 0;
  double worst = 0.0;
  for (const GridCell& c : dimension_grid(1)) {
    const double d = static_cast<double>(c.d_out);
    const double s = static_cast<double>(c.env);
    const double expected = (d * d - 1.0) / (d * d * s - d);
    const double got = diamond_bound(diff_operator(OperationKind::channel, {c.d_in, c.d_out, c.env}));
    const double err = std::abs(got - expected);
    worst = std::max(worst, err);
    if (err > 1e-10) {
      ++failed;
      out.detail += " " + cell_name(c);
    }
  }
  out.pass = failed == 0;
  out.detail = "max_err=" + fmt(worst) + (failed ? " failing_cells(d_in,d_out,s):" + out.detail : "");
  return out;
}

Outcome polar() {
  double worst = 0.0;
  for (const GridCell& c : dimension_grid(1)) worst = std::max(worst, verify_polar({c.d_in, c.d_out, c.env}).max());
  return {worst <= 1e-10, "max_residual=" + fmt(worst)};
}

Outcome saturation() {
  double worst = 0.0;
  for (const GridCell& c : dimension_grid(2)) worst = std::max(worst, saturation_check({c.d_in, c.d_out, c.env}).residual);
  return {worst <= 1e-10, "max_residual=" + fmt(worst)};
}

Outcome achievability() {
  double worst = 0.0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (std::size_t s = 1; s <= 4; ++s)
      for (OperationKind kind : {OperationKind::channel, OperationKind::povm}) {
        const SuccessReport r = optimal_strategy_success(kind, {2, d, s});
        worst = std::max(worst, std::abs(r.p_success - r.p_closed_form));
      }
  return {worst <= 1e-12, "max_err=" + fmt(worst)};
}

Outcome monte_carlo() {
  constexpr std::size_t n = 20000;
  const RngSeed seed{20240601};
  double worst = 0.0;
  Outcome out;
  for (const ComparisonDims dims : {ComparisonDims{2, 2, 1}, ComparisonDims{2, 2, 2}})
    for (OperationKind kind : {OperationKind::channel, OperationKind::povm}) {
      for (AverageMode mode : {AverageMode::same, AverageMode::different}) {
        const McReport r = estimate_avg_choi(kind, mode, dims, n, seed);
        worst = std::max(worst, r.z_max);
        if (!r.passes()) out.detail += " " + r.quantity;
      }
      const McReport r = estimate_success(kind, dims, n, seed);
      worst = std::max(worst, r.z_max);
      if (!r.passes()) out.detail += " " + r.quantity;
    }
  out.pass = worst <= kZThreshold;
  out.detail = "z_max=" + fmt(worst) + (out.pass ? "" : " failing:" + out.detail);
  return out;
}

Outcome lp_arbitration() {
  constexpr std::size_t grid = 1000;
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<std::size_t> dim(2, 8);
  std::uniform_int_distribution<std::size_t> env(1, 6);
  std::uniform_real_distribution<double> eps(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const OperationKind kind = i % 2 == 0 ? OperationKind::channel : OperationKind::povm;
    const LpCoefficients c = coefficients(kind, dim(gen), env(gen));
    const double e = eps(gen);
    worst = std::max(worst, std::abs(lp_solve(c, e).p2_star - lp_brute(c, e, grid).p2_star));
  }
  const double slope_check = lp_brute(coefficients(OperationKind::channel, 2, 2), 0.25, grid).p2_star;

  // POVM beta from the trace evaluation against the stated closed form.
  double beta_err = 0.0;
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t s = 1; s <= 4; ++s) {
      const LpCoefficients traced = coefficients_from_states(
          OperationKind::povm, rho_identical(OperationKind::povm, d, s, -1.0), rho_different(d));
      const double expected = (s - 1.0) / (s * static_cast<double>(d) - 1.0);
      beta_err = std::max(beta_err, std::abs(traced.beta - expected));
    }
  const bool pass = worst <= 2e-3 && std::abs(slope_check - 0.625) <= 2e-3 && beta_err <= 1e-12;
  return {pass, "max_gap=" + fmt(worst) + " p2(channel,2,2,0.25)=" + fmt(slope_check) +
                    " povm_beta_err=" + fmt(beta_err)};
}

Outcome tradeoff() {
  double worst = 0.0;
  double min_margin = 1.0;
  for (std::size_t d = 2; d <= 3; ++d)
    for (std::size_t s = 1; s <= 3; ++s)
      for (OperationKind kind : {OperationKind::channel, OperationKind::povm}) {
        const double alpha = coefficients(kind, d, s).alpha;
        const double sat = 1.0 - alpha;
        const double rhs = 1.0 - p_success(kind, d, s);
        worst = std::max(worst, std::abs(tradeoff_lhs(kind, d, s, sat) - rhs));
        if (sat <= 0.0) continue;
        for (double e : {0.9 * sat, 1.1 * sat}) {
          if (e < 0.0 || e > 1.0) continue;
          min_margin = std::min(min_margin, tradeoff_lhs(kind, d, s, e) - rhs);
        }
      }
  return {worst <= 1e-12 && min_margin > 1e-9, "max_residual=" + fmt(worst) + " min_margin=" + fmt(min_margin)};
}

Outcome known_results() {
  double worst = 0.0;
  for (std::size_t d = 2; d <= 6; ++d) {
    const double dd = static_cast<double>(d);
    worst = std::max(worst, std::abs(p2_star(OperationKind::channel, d, 1, 0.0) - (dd - 1.0) / (2.0 * dd)));
    worst = std::max(worst, std::abs(p2_star(OperationKind::povm, d, 1, 0.0) - (1.0 - 1.0 / dd)));
  }
  return {worst <= 1e-12, "max_err=" + fmt(worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"unitary landmark 7/8", landmark},
      {"diamond value identity", diamond_identity},
      {"polar decomposition residuals", polar},
      {"saturating input", saturation},
      {"strategy achievability", achievability},
      {"Monte Carlo concordance", monte_carlo},
      {"LP brute-force arbitration", lp_arbitration},
      {"tradeoff saturation", tradeoff},
      {"known-result recoveries", known_results},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
