#include "wtangle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wtangle/symstate.hpp"
#include "wtangle/tangle.hpp"

namespace wtangle::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMarginalTol = 1e-12;
constexpr double kMonogamyTol = 1e-10;
constexpr double kNegativityTol = 1e-9;

double max_entry_deviation(const CMatrix<double>& a, const CMatrix<double>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

PureStateVector<double> wclass_vector(int n, double theta) {
  return to_full_vector(wclass_state(n, theta));
}

std::string indexed(const std::string& name, int n) {
  return name + "[n=" + std::to_string(n) + "]";
}

}  // namespace

bool VerificationOutcome::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerificationOutcome::add(std::string check, std::string anchor, double numeric,
                              double reference, double tolerance) {
  add_deviation(std::move(check), std::move(anchor), numeric, reference,
                std::abs(numeric - reference), tolerance);
}

void VerificationOutcome::add_deviation(std::string check, std::string anchor, double numeric,
                                        double reference, double deviation, double tolerance) {
  checks.push_back(CheckResult{std::move(check), std::move(anchor), numeric, reference, deviation,
                               tolerance, deviation <= tolerance});
}

std::vector<double> default_theta_grid() {
  std::vector<double> grid(200);
  for (int j = 1; j <= 200; ++j) grid[j - 1] = 2.0 * kPi * j / 200.0;
  return grid;
}

std::vector<double> spot_thetas() { return {kPi / 3, kPi / 2, kPi, 3 * kPi / 2}; }

VerificationOutcome verify_marginals(int n, double theta) {
  require(n >= 3 && n <= 14, "verify_marginals: n must lie in [3, 14]");
  VerificationOutcome out{{"marginals", n, {theta}, std::nullopt}, {}};
  const auto psi = wclass_vector(n, theta);

  const auto pair_ref = partial_trace(psi, {1, 2});
  const auto single_ref = partial_trace(psi, {1});
  double pair_spread = 0;
  double single_spread = 0;
  for (int i = 1; i <= n; ++i) {
    single_spread = std::max(
        single_spread, max_entry_deviation(partial_trace(psi, {i}).matrix(), single_ref.matrix()));
    for (int j = i + 1; j <= n; ++j) {
      pair_spread = std::max(
          pair_spread, max_entry_deviation(partial_trace(psi, {i, j}).matrix(), pair_ref.matrix()));
    }
  }
  out.add_deviation("pair_marginals_identical", "symmetric_state_identical_marginals", pair_spread,
                    0.0, pair_spread, kMarginalTol);
  out.add_deviation("single_marginals_identical", "symmetric_state_identical_marginals",
                    single_spread, 0.0, single_spread, kMarginalTol);

  const auto pair_closed = closed_form_rho2(n, theta);
  const auto single_closed = closed_form_rho1(n, theta);
  const double pair_dev = max_entry_deviation(pair_ref.matrix(), pair_closed.matrix());
  const double single_dev = max_entry_deviation(single_ref.matrix(), single_closed.matrix());
  out.add_deviation("two_qubit_marginal_closed_form", "w_class_two_qubit_marginal",
                    pair_ref(0, 0).real(), pair_closed(0, 0).real(), pair_dev, kMarginalTol);
  out.add_deviation("single_qubit_marginal_closed_form", "w_class_single_qubit_marginal",
                    single_ref(0, 0).real(), single_closed(0, 0).real(), single_dev, kMarginalTol);
  return out;
}

VerificationOutcome verify_monogamy(int n, const std::vector<double>& thetas) {
  require(n >= 3 && n <= 12, "verify_monogamy: n must lie in [3, 12]");
  require(!thetas.empty(), "verify_monogamy: empty theta grid");
  VerificationOutcome out{{"monogamy", n, thetas, std::nullopt}, {}};

  double worst_gap = -1, worst_sum = 0, worst_det4 = 0;
  double worst_c_dev = -1, worst_c = 0, worst_c_ref = 0;
  double max_c = -1, argmax_theta = 0;
  for (double theta : thetas) {
    const auto psi = wclass_vector(n, theta);
    const double det4 = 4.0 * determinant(partial_trace(psi, {1}));
    double sum = 0;
    double c12 = 0;
    for (int k = 2; k <= n; ++k) {
      const double c = concurrence_2q(partial_trace(psi, {1, k}));
      if (k == 2) c12 = c;
      sum += c * c;
    }
    if (const double gap = std::abs(sum - det4); gap > worst_gap) {
      worst_gap = gap;
      worst_sum = sum;
      worst_det4 = det4;
    }
    const double ref = closed_form_pairwise_concurrence(n, theta);
    if (const double dev = std::abs(c12 - ref); dev > worst_c_dev) {
      worst_c_dev = dev;
      worst_c = c12;
      worst_c_ref = ref;
    }
    if (c12 > max_c) {
      max_c = c12;
      argmax_theta = theta;
    }
  }
  out.add_deviation(indexed("monogamy_equality", n), "w_class_monogamy_equality", worst_sum,
                    worst_det4, worst_gap, kMonogamyTol);
  out.add_deviation(indexed("pairwise_concurrence_closed_form", n), "w_class_pairwise_concurrence",
                    worst_c, worst_c_ref, worst_c_dev, kMonogamyTol);
  const bool has_pi = std::any_of(thetas.begin(), thetas.end(),
                                  [](double t) { return std::abs(t - kPi) <= 1e-12; });
  if (has_pi) {
    out.add(indexed("pairwise_concurrence_maximum", n), "w_state_maximal_pairwise_concurrence",
            max_c, 2.0 / n, kMonogamyTol);
    out.add(indexed("pairwise_concurrence_argmax", n), "w_state_maximal_pairwise_concurrence",
            argmax_theta, kPi, 1e-12);
  }
  return out;
}

VerificationOutcome verify_monogamy(const PureStateVector<double>& psi) {
  const int n = psi.n_qubits();
  require(n >= 3, "verify_monogamy: needs at least three qubits");
  std::vector<std::complex<double>> raw(psi.amps().data(), psi.amps().data() + psi.dim());
  VerificationOutcome out{{"monogamy_raw_vector", n, {}, std::move(raw)}, {}};
  for (int focus = 1; focus <= n; ++focus) {
    const double det4 = 4.0 * determinant(partial_trace(psi, {focus}));
    double sum = 0;
    for (int k = 1; k <= n; ++k) {
      if (k == focus) continue;
      const double c = concurrence_2q(partial_trace(psi, {focus, k}));
      sum += c * c;
    }
    out.add("monogamy_equality[focus=" + std::to_string(focus) + "]",
            "generalized_w_vanishing_concurrence_tangle", sum, det4, kMonogamyTol);
  }
  return out;
}

double direct_one_vs_rest_negativity(const PureStateVector<double>& psi, int focus) {
  const int qubits[] = {focus};
  const HermitianMatrix<double> projector(psi.amps() * psi.amps().adjoint());
  return trace_norm(partial_transpose(projector, psi.n_qubits(), qubits)) - 1.0;
}

VerificationOutcome verify_negativity_identity(int n, const std::vector<double>& thetas) {
  require(n >= 3 && n <= 8, "verify_negativity_identity: n must lie in [3, 8]");
  require(!thetas.empty(), "verify_negativity_identity: empty theta grid");
  VerificationOutcome out{{"negativity_identity", n, thetas, std::nullopt}, {}};

  std::vector<int> complement(static_cast<std::size_t>(n - 1));
  for (int q = 2; q <= n; ++q) complement[q - 2] = q;

  double worst = -1, worst_num = 0, worst_ref = 0;
  double worst_complement = 0;
  for (double theta : thetas) {
    const auto psi = wclass_vector(n, theta);
    const HermitianMatrix<double> projector(psi.amps() * psi.amps().adjoint());
    const int focus[] = {1};
    const double direct = trace_norm(partial_transpose(projector, n, focus)) - 1.0;
    const double ref = 2.0 * std::sqrt(std::max(determinant(partial_trace(psi, {1})), 0.0));
    if (const double dev = std::abs(direct - ref); dev > worst) {
      worst = dev;
      worst_num = direct;
      worst_ref = ref;
    }
    if (n <= 6) {
      const double other = trace_norm(partial_transpose(projector, n, complement)) - 1.0;
      worst_complement = std::max(worst_complement, std::abs(other - direct));
    }
  }
  out.add_deviation(indexed("one_vs_rest_negativity_equals_concurrence", n),
                    "one_vs_rest_negativity_identity", worst_num, worst_ref, worst, kNegativityTol);
  if (n <= 6) {
    out.add_deviation(indexed("partial_transpose_side_independent", n),
                      "one_vs_rest_negativity_identity", worst_complement, 0.0, worst_complement,
                      kNegativityTol);
  }
  return out;
}

VerificationOutcome verify_wstate_curve(const std::vector<int>& n_range) {
  require(!n_range.empty(), "verify_wstate_curve: empty qubit range");
  for (int n : n_range) require(n >= 3 && n <= 14, "verify_wstate_curve: n must lie in [3, 14]");
  VerificationOutcome out{{"w_state_curve", 0, {kPi}, std::nullopt}, {}};

  std::vector<int> ns = n_range;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  out.verification_case.n_qubits = ns.back();

  std::vector<double> values;
  for (int n : ns) {
    const double numeric = negativity_tangle(wclass_state(n, kPi));
    values.push_back(numeric);
    out.add(indexed("w_state_negativity_tangle", n), "w_state_negativity_tangle", numeric,
            wstate_negativity_tangle_closed<double>(n), kNegativityTol);
  }

  const auto at = [&](int n) -> std::optional<double> {
    const auto it = std::find(ns.begin(), ns.end(), n);
    if (it == ns.end()) return std::nullopt;
    return values[static_cast<std::size_t>(it - ns.begin())];
  };
  if (at(4)) {
    const auto best = std::max_element(values.begin(), values.end());
    const int argmax = ns[static_cast<std::size_t>(best - values.begin())];
    out.add("w_state_negativity_tangle_argmax", "w_state_tangle_maximal_at_four", argmax, 4.0, 0.0);
  }
  if (at(3) && at(4)) {
    const double margin = *at(4) - *at(3);
    out.add_deviation("three_qubit_below_four_qubit", "w_state_tangle_maximal_at_four", *at(3),
                      *at(4), margin > 0 ? 0.0 : -margin, 0.0);
  }
  int violations = 0;
  for (std::size_t i = 1; i < ns.size(); ++i) {
    if (ns[i - 1] >= 4 && ns[i] == ns[i - 1] + 1 && !(values[i] < values[i - 1])) ++violations;
  }
  out.add("w_state_tangle_decreasing_from_four", "w_state_tangle_maximal_at_four", violations, 0.0,
          0.0);
  return out;
}

bool SuiteResult::passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const VerificationOutcome& o) { return o.passed(); });
}

std::vector<std::string> SuiteResult::failing_checks() const {
  std::vector<std::string> failing;
  for (const auto& o : outcomes) {
    for (const auto& c : o.checks) {
      if (!c.pass) failing.push_back(o.verification_case.kind + "/" + c.check + " (" + c.anchor + ")");
    }
  }
  return failing;
}

SuiteResult run_suite(int max_n) {
  require(max_n >= 3 && max_n <= 14, "run_suite: max_n must lie in [3, 14]");
  SuiteResult suite;
  const auto grid = default_theta_grid();
  for (int n = 3; n <= max_n; ++n) {
    for (double theta : spot_thetas()) suite.outcomes.push_back(verify_marginals(n, theta));
  }
  for (int n = 3; n <= std::min(max_n, 12); ++n) {
    suite.outcomes.push_back(verify_monogamy(n, grid));
  }
  for (int n = 3; n <= std::min(max_n, 8); ++n) {
    suite.outcomes.push_back(verify_negativity_identity(n, n <= 6 ? grid : spot_thetas()));
  }
  std::vector<int> range;
  for (int n = 3; n <= max_n; ++n) range.push_back(n);
  suite.outcomes.push_back(verify_wstate_curve(range));
  return suite;
}

// ---------------------------------------------------------------------------
// JSON

void to_json(nlohmann::json& j, const CheckResult& c) {
  j = nlohmann::json{{"check", c.check},         {"anchor", c.anchor},
                     {"numeric", c.numeric},     {"reference", c.reference},
                     {"deviation", c.deviation}, {"tolerance", c.tolerance},
                     {"pass", c.pass}};
}

void from_json(const nlohmann::json& j, CheckResult& c) {
  j.at("check").get_to(c.check);
  j.at("anchor").get_to(c.anchor);
  j.at("numeric").get_to(c.numeric);
  j.at("reference").get_to(c.reference);
  j.at("deviation").get_to(c.deviation);
  j.at("tolerance").get_to(c.tolerance);
  j.at("pass").get_to(c.pass);
}

void to_json(nlohmann::json& j, const VerificationCase& c) {
  j = nlohmann::json{{"kind", c.kind}, {"n_qubits", c.n_qubits}, {"thetas", c.thetas}};
  if (c.raw_amplitudes) {
    auto amps = nlohmann::json::array();
    for (const auto& a : *c.raw_amplitudes) amps.push_back({a.real(), a.imag()});
    j["raw_amplitudes"] = std::move(amps);
  }
}

void from_json(const nlohmann::json& j, VerificationCase& c) {
  j.at("kind").get_to(c.kind);
  j.at("n_qubits").get_to(c.n_qubits);
  j.at("thetas").get_to(c.thetas);
  c.raw_amplitudes.reset();
  if (j.contains("raw_amplitudes")) {
    std::vector<std::complex<double>> amps;
    for (const auto& pair : j.at("raw_amplitudes")) {
      amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    c.raw_amplitudes = std::move(amps);
  }
}

void to_json(nlohmann::json& j, const VerificationOutcome& o) {
  j = nlohmann::json{{"case", o.verification_case}, {"checks", o.checks}, {"passed", o.passed()}};
}

void from_json(const nlohmann::json& j, VerificationOutcome& o) {
  j.at("case").get_to(o.verification_case);
  j.at("checks").get_to(o.checks);
}

nlohmann::json suite_to_json(const SuiteResult& suite) {
  return nlohmann::json{{"passed", suite.passed()},
                        {"failing", suite.failing_checks()},
                        {"outcomes", suite.outcomes}};
}

}  // namespace wtangle::oracle
