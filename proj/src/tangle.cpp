#include "wtangle/tangle.hpp"

#include <numbers>

namespace wtangle {

namespace {

double max_entry_deviation(const DensityMatrix<double>& a, const DensityMatrix<double>& b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace

TangleReport analyze(int n, double theta) {
  require(n >= 3, "analyze: needs at least three qubits");
  require(theta > 0.0 && theta <= two_pi<double> + tolerance<double>(1e-12),
          "analyze: theta must lie in (0, 2pi]");

  const auto state = wclass_state(n, theta);
  const auto psi = to_full_vector(state);
  const auto rho1 = partial_trace(psi, {1});
  const auto rho12 = partial_trace(psi, {1, 2});

  TangleReport report;
  report.n_qubits = n;
  report.theta = theta;
  report.concurrence_set = {concurrence_2q(rho12), concurrence_1_rest(rho1), MeasureKind::concurrence};
  report.negativity_set = {negativity_2q(rho12), negativity_1_rest(rho1), MeasureKind::negativity};
  report.concurrence_tangle = concurrence_tangle(psi, 1);
  report.negativity_tangle = negativity_tangle(state);

  double pairwise_sq_sum = 0;
  for (int k = 2; k <= n; ++k) {
    const double c = concurrence_2q(partial_trace(psi, {1, k}));
    pairwise_sq_sum += c * c;
  }

  auto& res = report.closed_form_residuals;
  res["pairwise_concurrence"] =
      std::abs(report.concurrence_set.pairwise - closed_form_pairwise_concurrence(n, theta));
  res["one_vs_rest_concurrence"] =
      std::abs(report.concurrence_set.one_vs_rest - closed_form_one_vs_rest_concurrence(n, theta));
  res["monogamy_gap"] = std::abs(pairwise_sq_sum - 4.0 * determinant(rho1));
  res["two_qubit_marginal"] = max_entry_deviation(rho12, closed_form_rho2(n, theta));
  res["single_qubit_marginal"] = max_entry_deviation(rho1, closed_form_rho1(n, theta));
  if (std::abs(theta - std::numbers::pi) <= 1e-12) {
    res["w_state_negativity_tangle"] =
        std::abs(report.negativity_tangle - wstate_negativity_tangle_closed<double>(n));
  }
  return report;
}

}  // namespace wtangle
