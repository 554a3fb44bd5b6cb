#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wtangle/densmat.hpp"

namespace wtangle::oracle {

/// Brute-force cross-checks of the closed-form results. Every numeric value
/// here is produced from raw 2^N amplitude vectors via partial_trace,
/// partial_transpose, the Wootters pipeline and trace norms only; closed
/// forms appear solely as reference values.

struct CheckResult {
  std::string check;
  /// The published result this check reproduces.
  std::string anchor;
  double numeric{};
  double reference{};
  double deviation{};
  double tolerance{};
  bool pass{};
};

struct VerificationCase {
  std::string kind;
  int n_qubits{};
  std::vector<double> thetas;
  std::optional<std::vector<std::complex<double>>> raw_amplitudes;
};

struct VerificationOutcome {
  VerificationCase verification_case;
  std::vector<CheckResult> checks;

  bool passed() const;
  void add(std::string check, std::string anchor, double numeric, double reference,
           double tolerance);
  void add_deviation(std::string check, std::string anchor, double numeric, double reference,
                     double deviation, double tolerance);
};

/// 200 uniform points 2*pi*j/200, j = 1..200.
std::vector<double> default_theta_grid();
/// pi/3, pi/2, pi, 3pi/2
std::vector<double> spot_thetas();

/// All pair and single marginals identical, and equal to the closed forms.
/// 3 <= n <= 14.
VerificationOutcome verify_marginals(int n, double theta);

/// sum_k C^2(1,k) against 4 det rho_1 over the grid, plus the pairwise
/// concurrence against (1 - cos theta)/n. 3 <= n <= 12.
VerificationOutcome verify_monogamy(int n, const std::vector<double>& thetas);

/// Monogamy gap of an arbitrary (e.g. non-symmetric W) pure state, for every
/// focus qubit.
VerificationOutcome verify_monogamy(const PureStateVector<double>& psi);

/// Direct 1:(N-1) negativity from the partially transposed projector against
/// 2 sqrt(det rho_1). For n <= 6 also checks that transposing the complement
/// gives the same trace norm. 3 <= n <= 8.
VerificationOutcome verify_negativity_identity(int n, const std::vector<double>& thetas);

/// Numeric negativity tangle of the W state against the closed form for each n,
/// with the maximum at n = 4 and strict decrease beyond it.
VerificationOutcome verify_wstate_curve(const std::vector<int>& n_range);

/// Direct 1:(N-1) negativity, ||psi psi^dagger^{T_focus}||_1 - 1.
double direct_one_vs_rest_negativity(const PureStateVector<double>& psi, int focus);

struct SuiteResult {
  std::vector<VerificationOutcome> outcomes;
  bool passed() const;
  std::vector<std::string> failing_checks() const;
};

/// Every verifier over qubit counts 3..max_n (each clipped to its own range).
SuiteResult run_suite(int max_n);

void to_json(nlohmann::json& j, const CheckResult& c);
void from_json(const nlohmann::json& j, CheckResult& c);
void to_json(nlohmann::json& j, const VerificationCase& c);
void from_json(const nlohmann::json& j, VerificationCase& c);
void to_json(nlohmann::json& j, const VerificationOutcome& o);
void from_json(const nlohmann::json& j, VerificationOutcome& o);

nlohmann::json suite_to_json(const SuiteResult& suite);

}  // namespace wtangle::oracle
