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

#include "qcompare/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <string>
#include <thread>

#include "qcompare/asymmetric.hpp"
#include "qcompare/errors.hpp"
#include "qcompare/symmetric.hpp"

namespace qcompare {

std::string_view to_string(AverageMode mode) { return mode == AverageMode::same ? "same" : "different"; }

AverageMode parse_average_mode(std::string_view text) {
  if (text == "same") return AverageMode::same;
  if (text == "different") return AverageMode::different;
  throw PreconditionError("unknown averaging mode '" + std::string(text) + "' (expected same or different)");
}

void RunningStats::add(double x) {
  ++count;
  const double delta = x - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (x - mean);
}

void RunningStats::merge(const RunningStats& other) {
  if (other.count == 0) return;
  if (count == 0) {
    *this = other;
    return;
  }
  const double n_a = static_cast<double>(count);
  const double n_b = static_cast<double>(other.count);
  const double total = n_a + n_b;
  const double delta = other.mean - mean;
  mean += delta * n_b / total;
  m2 += other.m2 + delta * delta * n_a * n_b / total;
  count += other.count;
}

double RunningStats::variance() const {
  return count > 1 ? std::max(0.0, m2 / static_cast<double>(count - 1)) : 0.0;
}

double RunningStats::standard_error() const {
  return count > 0 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
}

namespace {

// Writes one trial's components into `out`.
using TrialFn = std::function<void(RngStream&, std::span<double>)>;

std::vector<RunningStats> run_trials(std::size_t n, std::size_t components, RngSeed seed,
                                     const McOptions& options, const TrialFn& trial) {
  const std::size_t chunk = std::max<std::size_t>(1, options.chunk_size);
  const std::size_t n_chunks = (n + chunk - 1) / chunk;
  std::size_t threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, n_chunks);

  std::vector<std::vector<RunningStats>> per_chunk(n_chunks, std::vector<RunningStats>(components));
  auto work = [&](std::size_t first) {
    std::vector<double> values(components);
    for (std::size_t k = first; k < n_chunks; k += threads) {
      RngStream rng(seed, k);
      const std::size_t begin = k * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      for (std::size_t t = begin; t < end; ++t) {
        trial(rng, values);
        for (std::size_t c = 0; c < components; ++c) per_chunk[k][c].add(values[c]);
      }
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<RunningStats> total(components);
  for (const auto& stats : per_chunk)
    for (std::size_t c = 0; c < components; ++c) total[c].merge(stats[c]);
  return total;
}

void finish_report(McReport& report, const std::vector<RunningStats>& stats, RngSeed seed) {
  report.seed = seed;
  report.generator_id = std::string(RngStream::kGeneratorId);
  report.estimate.resize(stats.size());
  report.standard_error.resize(stats.size());
  report.standard_error_max = 0.0;
  report.z_max = 0.0;
  for (std::size_t c = 0; c < stats.size(); ++c) {
    report.estimate[c] = stats[c].mean;
    report.standard_error[c] = stats[c].standard_error();
    report.standard_error_max = std::max(report.standard_error_max, report.standard_error[c]);
    const double z = std::abs(report.estimate[c] - report.analytic[c]) /
                     std::max(report.standard_error[c], kStandardErrorFloor);
    report.z_max = std::max(report.z_max, z);
  }
}

void check_sample_count(std::size_t n) {
  if (n < kMinMonteCarloSamples) {
    throw PreconditionError("Monte Carlo needs at least " + std::to_string(kMinMonteCarloSamples) +
                            " samples, got " + std::to_string(n));
  }
}

// Single-box Choi J(o,i; o',k) = sum_e U[(o,e),i] conj(U[(o',e),k]).
ComplexMatrix single_choi(const Isometry& u) {
  const auto& dims = u.dims();
  const ComplexMatrix& m = u.matrix();
  const std::size_t din = dims.d_in, dout = dims.d_out, env = dims.env;
  ComplexMatrix j(dout * din, dout * din);
  for (std::size_t o = 0; o < dout; ++o)
    for (std::size_t i = 0; i < din; ++i)
      for (std::size_t o2 = 0; o2 < dout; ++o2)
        for (std::size_t k = 0; k < din; ++k) {
          Complex sum = 0.0;
          for (std::size_t e = 0; e < env; ++e) sum += m(o * env + e, i) * std::conj(m(o2 * env + e, k));
          j(o * din + i, o2 * din + k) = sum;
        }
  return j;
}

HermitianOperator pair_output(const Isometry& u, const Isometry& v, const ComplexMatrix& input, bool dephased) {
  ComplexMatrix out = stinespring_pair_map(u, v, input);
  if (dephased) out = dephase(out);
  return HermitianOperator(std::move(out), 1e-10);
}

}  // namespace

ComplexMatrix sampled_pair_choi(const Isometry& u, const Isometry& v, bool dephase_outputs) {
  if (!(u.dims() == v.dims())) throw DimensionError("sampled_pair_choi: isometry dims differ");
  const std::size_t din = u.dims().d_in;
  const std::size_t dout = u.dims().d_out;
  const ComplexMatrix ju = single_choi(u);
  const ComplexMatrix jv = single_choi(v);
  const std::size_t in2 = din * din;
  ComplexMatrix j(dout * dout * in2, dout * dout * in2);
  for (std::size_t o1 = 0; o1 < dout; ++o1)
    for (std::size_t o2 = 0; o2 < dout; ++o2)
      for (std::size_t p1 = 0; p1 < dout; ++p1)
        for (std::size_t p2 = 0; p2 < dout; ++p2) {
          if (dephase_outputs && (o1 != p1 || o2 != p2)) continue;
          const std::size_t row_out = (o1 * dout + o2) * in2;
          const std::size_t col_out = (p1 * dout + p2) * in2;
          for (std::size_t i1 = 0; i1 < din; ++i1)
            for (std::size_t i2 = 0; i2 < din; ++i2)
              for (std::size_t k1 = 0; k1 < din; ++k1)
                for (std::size_t k2 = 0; k2 < din; ++k2)
                  j(row_out + i1 * din + i2, col_out + k1 * din + k2) =
                      ju(o1 * din + i1, p1 * din + k1) * jv(o2 * din + i2, p2 * din + k2);
        }
  return j;
}

McReport estimate_avg_choi(OperationKind kind, AverageMode mode, const ComparisonDims& dims,
                           std::size_t n, RngSeed seed, const McOptions& options) {
  check_sample_count(n);
  dims.validate();
  require_nondegenerate(dims.d_out, dims.env);

  const ChoiMatrix reference =
      mode == AverageMode::different ? avg_choi_diff(dims.d_in, dims.d_out)
      : kind == OperationKind::channel ? avg_choi_channels_same(dims)
                                       : avg_choi_povm_same(dims);
  const ComplexMatrix& ref = reference.matrix().matrix();
  const std::size_t dim = ref.rows();

  McReport report;
  report.quantity = "avg_choi/" + std::string(to_string(kind)) + "/" + std::string(to_string(mode));
  report.n_samples = n;
  report.rows = dim;
  report.cols = dim;
  report.complex_entries = true;
  report.analytic.reserve(2 * dim * dim);
  for (const Complex& z : ref.entries()) {
    report.analytic.push_back(z.real());
    report.analytic.push_back(z.imag());
  }

  const bool dephased = kind == OperationKind::povm;
  const TrialFn trial = [&](RngStream& rng, std::span<double> out) {
    const Isometry u = haar_isometry(dims, rng);
    const ComplexMatrix j = mode == AverageMode::same ? sampled_pair_choi(u, u, dephased)
                                                      : sampled_pair_choi(u, haar_isometry(dims, rng), dephased);
    const auto entries = j.entries();
    for (std::size_t e = 0; e < entries.size(); ++e) {
      out[2 * e] = entries[e].real();
      out[2 * e + 1] = entries[e].imag();
    }
  };
  finish_report(report, run_trials(n, 2 * dim * dim, seed, options, trial), seed);
  return report;
}

McReport estimate_success(OperationKind kind, const ComparisonDims& dims, std::size_t n, RngSeed seed,
                          const McOptions& options) {
  check_sample_count(n);
  dims.validate();
  if (dims.d_in < 2) throw PreconditionError("estimate_success: needs d_in >= 2");
  require_nondegenerate(dims.d_out, dims.env);

  const ComplexMatrix input = antisym_state(dims.d_in).matrix();
  const HermitianOperator omega = accept_same_effect(kind, dims.d_out);
  const bool dephased = kind == OperationKind::povm;

  McReport report;
  report.quantity = "success/" + std::string(to_string(kind));
  report.n_samples = n;
  report.labels = {"p_success"};
  report.analytic = {p_success(kind, dims.d_out, dims.env)};

  const TrialFn trial = [&](RngStream& rng, std::span<double> out) {
    const bool same = rng.uniform() < 0.5;
    const Isometry u = haar_isometry(dims, rng);
    if (same) {
      out[0] = omega.expectation(pair_output(u, u, input, dephased));
    } else {
      const Isometry v = haar_isometry(dims, rng);
      out[0] = 1.0 - omega.expectation(pair_output(u, v, input, dephased));
    }
  };
  finish_report(report, run_trials(n, 1, seed, options, trial), seed);
  return report;
}

McReport estimate_error_pair(OperationKind kind, const ComparisonDims& dims, double epsilon,
                             std::size_t n, RngSeed seed, const McOptions& options) {
  check_sample_count(n);
  dims.validate();
  if (dims.d_in < 2) throw PreconditionError("estimate_error_pair: needs d_in >= 2");
  const LpCoefficients c = coefficients(kind, dims.d_out, dims.env);
  const TradeoffPoint point = lp_solve(c, epsilon);
  const HermitianOperator omega =
      projector_a(kind, dims.d_out) * point.t_A + projector_s(kind, dims.d_out) * point.t_S;
  const ComplexMatrix input = antisym_state(dims.d_in).matrix();
  const bool dephased = kind == OperationKind::povm;

  McReport report;
  report.quantity = "error_pair/" + std::string(to_string(kind));
  report.n_samples = n;
  report.rows = 1;
  report.cols = 2;
  report.labels = {"p_I", "p_II"};
  report.analytic = {1.0 - (c.alpha * point.t_A + c.beta * point.t_S), point.p2_star};

  const TrialFn trial = [&](RngStream& rng, std::span<double> out) {
    const Isometry u = haar_isometry(dims, rng);
    out[0] = 1.0 - omega.expectation(pair_output(u, u, input, dephased));
    const Isometry a = haar_isometry(dims, rng);
    const Isometry b = haar_isometry(dims, rng);
    out[1] = omega.expectation(pair_output(a, b, input, dephased));
  };
  finish_report(report, run_trials(n, 2, seed, options, trial), seed);
  return report;
}

}  // namespace qcompare
