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

#include "qcompare_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qcompare/qcompare.hpp"

namespace qcompare::cli {

namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<std::string, long long, double, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct CommandOutput {
  Json config = Json::object();
  Table table;
  /// Replaces the table in JSON output when set.
  std::optional<Json> results;
  /// Extra top-level JSON members (residuals, seed, generator_id).
  Json extras = Json::object();
  int exit_code = kExitOk;
};

struct Options {
  std::string kind = "channel";
  std::string d_in = "2";
  std::string d_out;
  std::string env;
  std::string eps;
  std::string eps_grid;
  std::size_t samples = 20000;
  std::uint64_t seed = 42;
  std::string format;
  std::string out;
  bool trivial_input = false;
  bool asymptotic = false;
  std::string suite = "all";
  std::string mode = "success";
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t parse_size(std::string_view text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw PreconditionError("not a non-negative integer: '" + std::string(text) + "'");
  }
  return value;
}

double parse_real(std::string_view text) {
  const std::string s(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || !std::isfinite(value)) {
    throw PreconditionError("not a finite real number: '" + s + "'");
  }
  return value;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      std::visit(
          [&os](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              os << format_real(v);
            } else if constexpr (std::is_same_v<T, bool>) {
              os << (v ? "true" : "false");
            } else {
              os << v;
            }
          },
          row[c]);
    }
    os << '\n';
  }
}

Json table_json(const Table& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::visit([&](const auto& v) { obj[table.columns[c]] = v; }, row[c]);
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

long long as_int(std::size_t v) { return static_cast<long long>(v); }

std::size_t single_value(const std::string& text, const char* flag) {
  const auto values = parse_size_list(text);
  if (values.size() != 1) throw PreconditionError(std::string(flag) + " takes a single value here");
  return values.front();
}

// d_in in {1,2,3}, d_out in {2,3}, s in {1,2,3}, skipping cells without an
// isometry (env * d_out < d_in).
std::vector<ComparisonDims> verification_grid(std::size_t min_d_in) {
  std::vector<ComparisonDims> cells;
  for (std::size_t d_in = min_d_in; d_in <= 3; ++d_in)
    for (std::size_t d_out = 2; d_out <= 3; ++d_out)
      for (std::size_t env = 1; env <= 3; ++env)
        if (env * d_out >= d_in) cells.push_back({d_in, d_out, env});
  return cells;
}

CommandOutput cmd_symmetric(const Options& o, bool sweep) {
  CommandOutput res;
  const OperationKind kind = parse_operation_kind(o.kind);
  const auto d_outs = parse_size_list(o.d_out.empty() ? (sweep ? "2:40" : "2") : o.d_out);
  const auto envs = parse_size_list(o.env.empty() ? (sweep ? "1,2,3" : "1") : o.env);
  if (o.trivial_input && kind != OperationKind::channel) {
    throw PreconditionError("--trivial-input is defined for channels only");
  }
  res.config = {{"command", sweep ? "sweep" : "symmetric"}, {"kind", o.kind}, {"d_out", d_outs},
                {"env", envs}, {"trivial_input", o.trivial_input}};
  res.table.columns = {"kind", "d_out", "s", "p_success"};
  for (std::size_t s : envs)
    for (std::size_t d : d_outs) {
      const double p = o.trivial_input ? p_success_trivial_input(d, s) : p_success(kind, d, s);
      res.table.rows.push_back({std::string(to_string(kind)), as_int(d), as_int(s), p});
    }
  return res;
}

CommandOutput cmd_asymptotic(const Options& o, bool kind_given) {
  if (kind_given && o.kind != "channel") throw PreconditionError("--asymptotic is defined for channels only");
  CommandOutput res;
  const auto envs = parse_size_list(o.env.empty() ? "1,2,3" : o.env);
  res.config = {{"command", "sweep"}, {"kind", "channel"}, {"asymptotic", true}, {"env", envs}};
  res.table.columns = {"s", "p_success"};
  for (std::size_t s : envs) {
    res.table.rows.push_back({as_int(s), 0.5 + 0.25 / static_cast<double>(s)});
  }
  return res;
}

std::vector<double> epsilon_values(const Options& o) {
  if (!o.eps.empty() && !o.eps_grid.empty()) throw PreconditionError("use either --eps or --eps-grid");
  std::vector<double> values = !o.eps.empty() ? std::vector<double>{parse_real(o.eps)}
                                              : parse_real_list(o.eps_grid.empty() ? "0:0.05:1" : o.eps_grid);
  for (double e : values) {
    if (e < 0.0 || e > 1.0) throw PreconditionError("epsilon must lie in [0, 1], got " + format_real(e));
  }
  std::sort(values.begin(), values.end());
  return values;
}

CommandOutput cmd_asymmetric(const Options& o) {
  CommandOutput res;
  const OperationKind kind = parse_operation_kind(o.kind);
  const auto d_outs = parse_size_list(o.d_out.empty() ? "2" : o.d_out);
  const auto envs = parse_size_list(o.env.empty() ? "1" : o.env);
  const std::vector<double> grid = epsilon_values(o);
  res.config = {{"command", "asymmetric"}, {"kind", o.kind}, {"d_out", d_outs}, {"env", envs}, {"epsilon", grid}};
  res.table.columns = {"kind", "d_out", "s", "epsilon", "p2_star", "t_A", "t_S", "saturates_tradeoff"};
  for (std::size_t s : envs)
    for (std::size_t d : d_outs) {
      const LpCoefficients c = coefficients(kind, d, s);
      const double breakpoint = 1.0 - c.alpha;
      std::vector<double> eps = grid;
      const bool present = std::any_of(eps.begin(), eps.end(),
                                       [&](double e) { return std::abs(e - breakpoint) <= 1e-12; });
      if (!present) eps.insert(std::upper_bound(eps.begin(), eps.end(), breakpoint), breakpoint);
      for (double e : eps) {
        const TradeoffPoint point = lp_solve(c, e);
        res.table.rows.push_back({std::string(to_string(kind)), as_int(d), as_int(s), e, p2_star(kind, d, s, e),
                                  point.t_A, point.t_S, std::abs(e - breakpoint) <= 1e-12});
      }
    }
  return res;
}

Json report_json(const McReport& r) {
  return {{"quantity", r.quantity},
          {"n_samples", r.n_samples},
          {"rows", r.rows},
          {"cols", r.cols},
          {"complex_entries", r.complex_entries},
          {"labels", r.labels},
          {"estimate", r.estimate},
          {"standard_error", r.standard_error},
          {"analytic", r.analytic},
          {"standard_error_max", r.standard_error_max},
          {"z_max", r.z_max},
          {"passes", r.passes()},
          {"seed", r.seed.value},
          {"generator_id", r.generator_id}};
}

std::string component_label(const McReport& r, std::size_t c) {
  if (!r.labels.empty() && c < r.labels.size()) return r.labels[c];
  if (r.complex_entries) {
    const std::size_t entry = c / 2;
    return std::string(c % 2 ? "im(" : "re(") + std::to_string(entry / r.cols) + ";" +
           std::to_string(entry % r.cols) + ")";
  }
  return std::to_string(c);
}

CommandOutput cmd_montecarlo(const Options& o) {
  CommandOutput res;
  const OperationKind kind = parse_operation_kind(o.kind);
  const ComparisonDims dims{single_value(o.d_in, "--d-in"), single_value(o.d_out.empty() ? "2" : o.d_out, "--d-out"),
                            single_value(o.env.empty() ? "1" : o.env, "--env")};
  const RngSeed seed{o.seed};
  res.config = {{"command", "montecarlo"}, {"kind", o.kind}, {"mode", o.mode}, {"d_in", dims.d_in},
                {"d_out", dims.d_out}, {"env", dims.env}, {"samples", o.samples}, {"seed", o.seed}};

  std::vector<McReport> reports;
  if (o.mode == "success") {
    reports.push_back(estimate_success(kind, dims, o.samples, seed));
  } else if (o.mode == "choi") {
    for (AverageMode mode : {AverageMode::same, AverageMode::different}) {
      reports.push_back(estimate_avg_choi(kind, mode, dims, o.samples, seed));
    }
  } else {
    const double eps = o.eps.empty() ? 0.0 : parse_real(o.eps);
    res.config["epsilon"] = eps;
    reports.push_back(estimate_error_pair(kind, dims, eps, o.samples, seed));
  }

  Json results = Json::array();
  res.table.columns = {"quantity", "component", "estimate", "standard_error", "analytic", "z"};
  double z_max = 0.0;
  for (const McReport& r : reports) {
    results.push_back(report_json(r));
    z_max = std::max(z_max, r.z_max);
    if (!r.passes()) res.exit_code = kExitCheckFailed;
    for (std::size_t c = 0; c < r.estimate.size(); ++c) {
      const double z = std::abs(r.estimate[c] - r.analytic[c]) / std::max(r.standard_error[c], kStandardErrorFloor);
      res.table.rows.push_back({r.quantity, component_label(r, c), r.estimate[c], r.standard_error[c],
                                r.analytic[c], z});
    }
  }
  res.results = std::move(results);
  res.extras = {{"z_max", z_max}, {"seed", o.seed}, {"generator_id", std::string(RngStream::kGeneratorId)}};
  return res;
}

struct Check {
  std::string suite;
  std::string name;
  std::size_t cases = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
};

void suite_polar(std::vector<Check>& checks) {
  Check c{"polar", "polar_factor", 0, 0.0, 1e-10};
  for (const auto& dims : verification_grid(1)) {
    c.max_residual = std::max(c.max_residual, verify_polar(dims).max());
    ++c.cases;
  }
  checks.push_back(c);
}

void suite_saturation(std::vector<Check>& checks) {
  Check c{"saturation", "antisymmetric_input", 0, 0.0, 1e-10};
  for (const auto& dims : verification_grid(2)) {
    c.max_residual = std::max(c.max_residual, saturation_check(dims).residual);
    ++c.cases;
  }
  checks.push_back(c);
}

void suite_lp(std::vector<Check>& checks) {
  constexpr std::size_t grid = 1000;
  Check brute{"lp", "brute_force", 0, 0.0, 2.0 / grid};
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<std::size_t> dim(2, 8);
  std::uniform_int_distribution<std::size_t> env(1, 6);
  std::uniform_real_distribution<double> eps(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const OperationKind kind = i % 2 == 0 ? OperationKind::channel : OperationKind::povm;
    const LpCoefficients c = coefficients(kind, dim(gen), env(gen));
    const double e = eps(gen);
    brute.max_residual = std::max(brute.max_residual, std::abs(lp_solve(c, e).p2_star - lp_brute(c, e, grid).p2_star));
    ++brute.cases;
  }
  checks.push_back(brute);

  Check closed{"lp", "closed_form", 0, 0.0, 1e-12};
  for (std::size_t d = 2; d <= 6; ++d)
    for (std::size_t s = 1; s <= 4; ++s)
      for (OperationKind kind : {OperationKind::channel, OperationKind::povm})
        for (int k = 0; k <= 100; ++k) {
          const double e = k / 100.0;
          const double gap = std::abs(p2_star(kind, d, s, e) - lp_solve(coefficients(kind, d, s), e).p2_star);
          closed.max_residual = std::max(closed.max_residual, gap);
          ++closed.cases;
        }
  checks.push_back(closed);

  Check tradeoff{"lp", "tradeoff_saturation", 0, 0.0, 1e-12};
  for (std::size_t d = 2; d <= 3; ++d)
    for (std::size_t s = 1; s <= 3; ++s)
      for (OperationKind kind : {OperationKind::channel, OperationKind::povm}) {
        tradeoff.max_residual = std::max(tradeoff.max_residual, tradeoff_relation(kind, d, s).residual);
        ++tradeoff.cases;
      }
  checks.push_back(tradeoff);
}

void suite_choi(std::vector<Check>& checks) {
  Check partial{"choi", "partial_abs_closed_form", 0, 0.0, 1e-10};
  Check tp{"choi", "averaged_trace_preserving", 0, 0.0, 1e-10};
  Check cp{"choi", "averaged_positive", 0, 0.0, 1e-10};
  for (const auto& dims : verification_grid(1)) {
    for (OperationKind kind : {OperationKind::channel, OperationKind::povm}) {
      const HermitianOperator numeric = partial_abs_numeric(diff_operator(kind, dims));
      const HermitianOperator closed = partial_abs_closed_form(kind, dims);
      partial.max_residual =
          std::max(partial.max_residual, frobenius_distance(numeric.matrix(), closed.matrix()));
      ++partial.cases;

      const ChoiMatrix j = kind == OperationKind::channel ? avg_choi_channels_same(dims) : avg_choi_povm_same(dims);
      const HermitianOperator in_identity = HermitianOperator::identity(j.in_dim());
      tp.max_residual = std::max(tp.max_residual, frobenius_distance(j.trace_outputs().matrix(), in_identity.matrix()));
      ++tp.cases;
      const double lowest = herm_eig(j.matrix()).values.back();
      cp.max_residual = std::max(cp.max_residual, std::max(0.0, -lowest));
      ++cp.cases;
    }
  }
  checks.push_back(partial);
  checks.push_back(tp);
  checks.push_back(cp);
}

CommandOutput cmd_verify(const Options& o) {
  CommandOutput res;
  res.config = {{"command", "verify"}, {"suite", o.suite}};
  std::vector<Check> checks;
  const bool all = o.suite == "all";
  if (all || o.suite == "polar") suite_polar(checks);
  if (all || o.suite == "saturation") suite_saturation(checks);
  if (all || o.suite == "lp") suite_lp(checks);
  if (all || o.suite == "choi") suite_choi(checks);

  res.table.columns = {"suite", "check", "cases", "max_residual", "tolerance", "pass"};
  Json residuals = Json::object();
  for (const Check& c : checks) {
    const bool pass = c.max_residual <= c.tolerance;
    if (!pass) res.exit_code = kExitCheckFailed;
    res.table.rows.push_back({c.suite, c.name, as_int(c.cases), c.max_residual, c.tolerance, pass});
    residuals[c.suite + "/" + c.name] = c.max_residual;
  }
  res.extras = {{"residuals", residuals}};
  return res;
}

void emit(const CommandOutput& res, const std::string& format, std::ostream& os) {
  if (format == "csv") {
    write_csv(res.table, os);
    return;
  }
  Json doc = {{"config", res.config}, {"results", res.results ? *res.results : table_json(res.table)}};
  for (auto it = res.extras.begin(); it != res.extras.end(); ++it) doc[it.key()] = it.value();
  os << doc.dump(2) << '\n';
}

}  // namespace

std::vector<std::size_t> parse_size_list(std::string_view text) {
  if (text.empty()) throw PreconditionError("empty integer list");
  std::vector<std::size_t> values;
  for (std::string_view part : split(text, ',')) {
    const auto bounds = split(part, ':');
    if (bounds.size() == 1) {
      values.push_back(parse_size(part));
    } else if (bounds.size() == 2) {
      const std::size_t lo = parse_size(bounds[0]);
      const std::size_t hi = parse_size(bounds[1]);
      if (hi < lo) throw PreconditionError("empty range '" + std::string(part) + "'");
      if (hi - lo > 100000) throw PreconditionError("range too long: '" + std::string(part) + "'");
      for (std::size_t v = lo; v <= hi; ++v) values.push_back(v);
    } else {
      throw PreconditionError("malformed range '" + std::string(part) + "'");
    }
  }
  for (std::size_t v : values) {
    if (v == 0) throw PreconditionError("dimensions must be positive");
  }
  return values;
}

std::vector<double> parse_real_list(std::string_view text) {
  if (text.empty()) throw PreconditionError("empty real list");
  std::vector<double> values;
  for (std::string_view part : split(text, ',')) {
    const auto fields = split(part, ':');
    if (fields.size() == 1) {
      values.push_back(parse_real(part));
      continue;
    }
    if (fields.size() != 3) throw PreconditionError("grid must be start:step:end, got '" + std::string(part) + "'");
    const double start = parse_real(fields[0]);
    const double step = parse_real(fields[1]);
    const double end = parse_real(fields[2]);
    if (!(step > 0.0) || end < start) throw PreconditionError("empty grid '" + std::string(part) + "'");
    const double span = (end - start) / step;
    if (span > 1e6) throw PreconditionError("grid too long: '" + std::string(part) + "'");
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9));
    for (std::size_t k = 0; k <= count; ++k) values.push_back(std::min(end, start + static_cast<double>(k) * step));
  }
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Comparison of Haar-random quantum channels and measurements", "qcompare"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> kinds = {"channel", "povm"};
  const std::vector<std::string> formats = {"csv", "json"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", o.out, "Output file (default: standard output)");
  };
  auto add_kind = [&](CLI::App* sub) {
    return sub->add_option("--kind", o.kind, "Operation kind")->check(CLI::IsMember(kinds));
  };

  auto* symmetric = app.add_subcommand("symmetric", "Optimal symmetric success probability");
  add_kind(symmetric);
  symmetric->add_option("--d-out", o.d_out, "Output dimension(s)");
  symmetric->add_option("--env", o.env, "Environment dimension(s)");
  symmetric->add_flag("--trivial-input", o.trivial_input, "One-dimensional input (channels)");
  add_common(symmetric);

  auto* sweep = app.add_subcommand("sweep", "Success probability over a dimension grid");
  CLI::Option* sweep_kind = add_kind(sweep);
  sweep->add_option("--d-out", o.d_out, "Output dimension range (default 2:40)");
  sweep->add_option("--env", o.env, "Environment dimensions (default 1,2,3)");
  sweep->add_flag("--asymptotic", o.asymptotic, "Large output dimension limit (channels)");
  sweep->add_flag("--trivial-input", o.trivial_input, "One-dimensional input (channels)");
  add_common(sweep);

  auto* asymmetric = app.add_subcommand("asymmetric", "Optimal type-II error under a type-I cap");
  add_kind(asymmetric);
  asymmetric->add_option("--d-out", o.d_out, "Output dimension(s)");
  asymmetric->add_option("--env", o.env, "Environment dimension(s)");
  asymmetric->add_option("--eps", o.eps, "Single type-I cap");
  asymmetric->add_option("--eps-grid", o.eps_grid, "start:step:end (default 0:0.05:1)");
  add_common(asymmetric);

  auto* montecarlo = app.add_subcommand("montecarlo", "Sampling check of the closed forms");
  add_kind(montecarlo);
  montecarlo->add_option("--d-in", o.d_in, "Input dimension");
  montecarlo->add_option("--d-out", o.d_out, "Output dimension");
  montecarlo->add_option("--env", o.env, "Environment dimension");
  montecarlo->add_option("--samples", o.samples, "Number of trials");
  montecarlo->add_option("--seed", o.seed, "Random seed");
  montecarlo->add_option("--mode", o.mode, "success, choi or errors")
      ->check(CLI::IsMember(std::vector<std::string>{"success", "choi", "errors"}));
  montecarlo->add_option("--eps", o.eps, "Type-I cap for --mode errors");
  add_common(montecarlo);

  auto* verify = app.add_subcommand("verify", "Residual and oracle checks over a built-in grid");
  verify->add_option("--suite", o.suite, "polar, saturation, lp, choi or all")
      ->check(CLI::IsMember(std::vector<std::string>{"polar", "saturation", "lp", "choi", "all"}));
  add_common(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qcompare: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    CommandOutput res;
    std::string default_format = "csv";
    if (symmetric->parsed()) {
      res = cmd_symmetric(o, false);
    } else if (sweep->parsed()) {
      res = o.asymptotic ? cmd_asymptotic(o, sweep_kind->count() > 0) : cmd_symmetric(o, true);
    } else if (asymmetric->parsed()) {
      res = cmd_asymmetric(o);
    } else if (montecarlo->parsed()) {
      default_format = "json";
      res = cmd_montecarlo(o);
    } else {
      res = cmd_verify(o);
    }
    const std::string format = o.format.empty() ? default_format : o.format;
    if (o.out.empty()) {
      emit(res, format, out);
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw PreconditionError("cannot open output file '" + o.out + "'");
      emit(res, format, file);
      if (!file) throw PreconditionError("failed writing output file '" + o.out + "'");
    }
    return res.exit_code;
  } catch (const NumericalError& e) {
    err << "qcompare: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "qcompare: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qcompare::cli
