#include "wtangle/cli.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "wtangle/oracle.hpp"

namespace wtangle::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s, std::string_view what) {
  s = trim(s);
  double value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw UsageError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return value;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw UsageError("invalid integer: '" + std::string(s) + "'");
  }
  return value;
}

constexpr std::array<std::pair<Quantity, std::string_view>, 5> kQuantityNames{{
    {Quantity::pairwise_concurrence, "pairwise_concurrence"},
    {Quantity::pairwise_negativity, "pairwise_negativity"},
    {Quantity::one_vs_rest_negativity, "one_vs_rest_negativity"},
    {Quantity::concurrence_tangle, "concurrence_tangle"},
    {Quantity::negativity_tangle, "negativity_tangle"},
}};

struct RowValues {
  std::array<double, kQuantityNames.size()> values{};
};

RowValues compute_row(int n, double theta) {
  const auto psi = to_full_vector(wclass_state(n, theta));
  const auto rho1 = partial_trace(psi, {1});
  const auto rho12 = partial_trace(psi, {1, 2});
  RowValues row;
  row.values[static_cast<std::size_t>(Quantity::pairwise_concurrence)] = concurrence_2q(rho12);
  row.values[static_cast<std::size_t>(Quantity::pairwise_negativity)] = negativity_2q(rho12);
  row.values[static_cast<std::size_t>(Quantity::one_vs_rest_negativity)] = negativity_1_rest(rho1);
  row.values[static_cast<std::size_t>(Quantity::concurrence_tangle)] = concurrence_tangle(psi, 1);
  row.values[static_cast<std::size_t>(Quantity::negativity_tangle)] =
      negativity_tangle_focus(psi, 1);
  return row;
}

/// Runs `body` for the given output destination: stdout when `path` is empty
/// or "-", otherwise a freshly truncated file.
template <typename Body>
void with_output(const std::string& path, std::ostream& stdout_stream, Body&& body) {
  if (path.empty() || path == "-") {
    body(stdout_stream);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  body(file);
  file.flush();
  if (!file) throw std::runtime_error("failed writing output file '" + path + "'");
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw UsageError("empty angle");
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) return parse_double(s, "angle");

  std::string_view coef = trim(s.substr(0, pi_pos));
  std::string_view tail = trim(s.substr(pi_pos + 2));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  double factor = 1.0;
  if (coef == "-") {
    factor = -1.0;
  } else if (coef == "+") {
    factor = 1.0;
  } else if (!coef.empty()) {
    factor = parse_double(coef, "angle coefficient");
  }
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw UsageError("invalid angle: '" + std::string(s) + "'");
    divisor = parse_double(tail.substr(1), "angle divisor");
    if (divisor == 0.0) throw UsageError("angle divisor must be non-zero");
  }
  return factor * std::numbers::pi / divisor;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const int lo = parse_int(item.substr(0, dots));
      const int hi = parse_int(item.substr(dots + 2));
      if (hi < lo) throw UsageError("empty range '" + std::string(item) + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_int(item));
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::string_view quantity_name(Quantity q) {
  return kQuantityNames[static_cast<std::size_t>(q)].second;
}

Quantity parse_quantity(std::string_view name) {
  name = trim(name);
  for (const auto& [q, n] : kQuantityNames) {
    if (n == name) return q;
  }
  throw UsageError("unknown quantity '" + std::string(name) + "'");
}

std::vector<Quantity> all_quantities() {
  std::vector<Quantity> out;
  for (const auto& entry : kQuantityNames) out.push_back(entry.first);
  return out;
}

void SweepSpec::validate() const {
  if (n_list.empty()) throw UsageError("sweep: qubit list is empty");
  for (int n : n_list) {
    if (n < 3 || n > kDefaultQubitCap) throw UsageError("sweep: qubit counts must lie in [3, 20]");
  }
  if (theta_steps < 2) throw UsageError("sweep: theta_steps must be at least 2");
  if (!(theta_start < theta_end)) throw UsageError("sweep: theta_start must be below theta_end");
  if (theta_start < 0.0 || theta_end > two_pi<double> + 1e-12) {
    throw UsageError("sweep: theta range must lie within [0, 2pi]");
  }
  if (quantities.empty()) throw UsageError("sweep: no quantities requested");
}

std::vector<double> SweepSpec::thetas() const {
  std::vector<double> out(static_cast<std::size_t>(theta_steps));
  const double step = (theta_end - theta_start) / (theta_steps - 1);
  for (int i = 0; i < theta_steps; ++i) out[i] = theta_start + i * step;
  out.back() = theta_end;
  return out;
}

std::string format_value(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 12);
  if (ec != std::errc{}) throw std::runtime_error("format_value: conversion failed");
  return std::string(buf.data(), ptr);
}

void write_sweep_csv(const SweepSpec& spec, std::ostream& out) {
  spec.validate();
  const auto thetas = spec.thetas();
  struct Point {
    int n;
    double theta;
  };
  std::vector<Point> points;
  for (int n : spec.n_list) {
    for (double t : thetas) points.push_back({n, t});
  }

  std::vector<RowValues> rows(points.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16u));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
          rows[i] = compute_row(points[i].n, points[i].theta);
        }
      });
    }
  }

  out << "n,theta";
  for (Quantity q : spec.quantities) out << ',' << quantity_name(q);
  out << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << points[i].n << ',' << format_value(points[i].theta);
    for (Quantity q : spec.quantities) {
      out << ',' << format_value(rows[i].values[static_cast<std::size_t>(q)]);
    }
    out << '\n';
  }
}

nlohmann::json report_to_json(const TangleReport& report) {
  return nlohmann::json{
      {"n_qubits", report.n_qubits},
      {"theta", report.theta},
      {"pairwise_concurrence", report.concurrence_set.pairwise},
      {"one_vs_rest_concurrence", report.concurrence_set.one_vs_rest},
      {"pairwise_negativity", report.negativity_set.pairwise},
      {"one_vs_rest_negativity", report.negativity_set.one_vs_rest},
      {"concurrence_tangle", report.concurrence_tangle},
      {"negativity_tangle", report.negativity_tangle},
      {"closed_form_residuals", report.closed_form_residuals},
  };
}

std::string classify_listing(int n, int r) {
  if (n < 1 || r < 1 || r > n) throw UsageError("classify: need 1 <= r <= n");
  std::ostringstream out;
  for (const auto& config : enumerate_slocc_configs(n, r)) out << config.label() << '\n';
  out << "count = " << partition_count(n, r) << '\n';
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement monogamy of symmetric W-class qubit states"};
  app.require_subcommand(1);

  std::string output;

  int analyze_n = 0;
  std::string analyze_theta;
  auto* analyze_cmd = app.add_subcommand("analyze", "Measures and tangles of one W-class state");
  analyze_cmd->add_option("--n", analyze_n, "Qubit count (>= 3)")->required();
  analyze_cmd->add_option("--theta", analyze_theta, "Angle in (0, 2pi]; accepts pi, pi/2, ...")
      ->required();
  analyze_cmd->add_option("--output", output, "JSON output path (default stdout)");

  std::string sweep_n = "3..6";
  std::string sweep_start = "0";
  std::string sweep_end = "2pi";
  int sweep_steps = 201;
  std::string sweep_quantities;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate quantities over a theta grid as CSV");
  sweep_cmd->add_option("--n", sweep_n, "Qubit counts, e.g. 3,4,5 or 3..6");
  sweep_cmd->add_option("--theta-start", sweep_start, "First angle");
  sweep_cmd->add_option("--theta-end", sweep_end, "Last angle");
  sweep_cmd->add_option("--theta-steps", sweep_steps, "Number of grid points (>= 2)");
  sweep_cmd->add_option("--quantities", sweep_quantities,
                        "Comma-separated columns (default: all)");
  sweep_cmd->add_option("--output", output, "CSV output path (default stdout)");

  int verify_max_n = 6;
  auto* verify_cmd = app.add_subcommand("verify", "Run the brute-force verification suite");
  verify_cmd->add_option("--max-n", verify_max_n, "Largest qubit count, in [3, 14]");
  verify_cmd->add_option("--output", output, "JSON report path (default stdout)");

  int classify_n = 0;
  int classify_r = 0;
  auto* classify_cmd = app.add_subcommand("classify", "List SLOCC degeneracy configurations");
  classify_cmd->add_option("--n", classify_n, "Qubit count")->required();
  classify_cmd->add_option("--r", classify_r, "Number of distinct spinors")->required();
  classify_cmd->add_option("--output", output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return static_cast<int>(ExitCode::ok);
    }
    err << "error: " << e.what() << '\n' << app.help();
    return static_cast<int>(ExitCode::usage);
  }

  try {
    if (*analyze_cmd) {
      const double theta = parse_angle(analyze_theta);
      if (analyze_n < 3 || analyze_n > kDefaultQubitCap) {
        throw UsageError("analyze: --n must lie in [3, 20]");
      }
      if (!(theta > 0.0 && theta <= two_pi<double> + 1e-12)) {
        throw UsageError("analyze: --theta must lie in (0, 2pi]");
      }
      const auto json = report_to_json(analyze(analyze_n, theta));
      with_output(output, out, [&](std::ostream& os) { os << json.dump(2) << '\n'; });
      return static_cast<int>(ExitCode::ok);
    }
    if (*sweep_cmd) {
      SweepSpec spec;
      spec.n_list = parse_int_list(sweep_n);
      spec.theta_start = parse_angle(sweep_start);
      spec.theta_end = parse_angle(sweep_end);
      spec.theta_steps = sweep_steps;
      if (sweep_quantities.empty()) {
        spec.quantities = all_quantities();
      } else {
        std::string_view rest = sweep_quantities;
        while (true) {
          const auto comma = rest.find(',');
          spec.quantities.push_back(parse_quantity(rest.substr(0, comma)));
          if (comma == std::string_view::npos) break;
          rest.remove_prefix(comma + 1);
        }
      }
      spec.validate();
      with_output(output, out, [&](std::ostream& os) { write_sweep_csv(spec, os); });
      return static_cast<int>(ExitCode::ok);
    }
    if (*verify_cmd) {
      if (verify_max_n < 3 || verify_max_n > 14) {
        throw UsageError("verify: --max-n must lie in [3, 14]");
      }
      const auto suite = oracle::run_suite(verify_max_n);
      const auto json = oracle::suite_to_json(suite);
      with_output(output, out, [&](std::ostream& os) { os << json.dump(2) << '\n'; });
      if (!suite.passed()) {
        err << "verification failed:\n";
        for (const auto& f : suite.failing_checks()) err << "  " << f << '\n';
        return static_cast<int>(ExitCode::verification_failed);
      }
      return static_cast<int>(ExitCode::ok);
    }
    if (*classify_cmd) {
      const auto listing = classify_listing(classify_n, classify_r);
      with_output(output, out, [&](std::ostream& os) { os << listing; });
      return static_cast<int>(ExitCode::ok);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  }
  return static_cast<int>(ExitCode::usage);
}

}  // namespace wtangle::cli
