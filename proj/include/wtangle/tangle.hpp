#pragma once

#include <cmath>
#include <map>
#include <string>

#include "wtangle/densmat.hpp"
#include "wtangle/symstate.hpp"

namespace wtangle {

// ---------------------------------------------------------------------------
// bipartite measures

/// Wootters concurrence max(0, s1 - s2 - s3 - s4), s_i the square roots of
/// the eigenvalues of rho * spin_flip(rho) in descending order.
template <typename Real>
Real concurrence_2q(const DensityMatrix<Real>& rho) {
  const RVector<Real> s = spin_flip_singular_values(rho);
  return std::max(Real(0), s(0) - s(1) - s(2) - s(3));
}

/// Concurrence between one qubit and the rest of a pure state, 2 sqrt(det rho1).
template <typename Real>
Real concurrence_1_rest(const DensityMatrix<Real>& rho1) {
  require(rho1.dim() == 2, "concurrence_1_rest: expects a single-qubit density matrix");
  return Real(2) * std::sqrt(std::max(determinant(rho1), Real(0)));
}

/// Negativity in the doubled convention ||rho^T||_1 - 1, range [0, 1].
template <typename Real>
Real negativity_2q(const DensityMatrix<Real>& rho) {
  return std::max(trace_norm(partial_transpose(rho)) - Real(1), Real(0));
}

/// Halved (textbook) convention, (||rho^T||_1 - 1) / 2.
template <typename Real>
Real negativity_2q_halved(const DensityMatrix<Real>& rho) {
  return negativity_2q(rho) / 2;
}

/// For a pure global state the 1:(N-1) negativity equals the 1:(N-1)
/// concurrence; the oracle checks this against a direct partial transpose.
template <typename Real>
Real negativity_1_rest(const DensityMatrix<Real>& rho1) {
  return concurrence_1_rest(rho1);
}

// ---------------------------------------------------------------------------
// tangles, generic pipeline

/// C^2(focus : rest) minus the squared concurrences of `focus` with every other
/// qubit, each pair marginal traced out independently.
template <typename Real>
Real concurrence_tangle(const PureStateVector<Real>& psi, int focus) {
  const int n = psi.n_qubits();
  require(n >= 3, "concurrence_tangle: needs at least three qubits");
  if (focus < 1 || focus > n) throw std::out_of_range("concurrence_tangle: focus out of range");
  const Real one_vs_rest = concurrence_1_rest(partial_trace(psi, {focus}));
  Real pairwise_sum = 0;
  for (int k = 1; k <= n; ++k) {
    if (k == focus) continue;
    const Real c = concurrence_2q(partial_trace(psi, {focus, k}));
    pairwise_sum += c * c;
  }
  return one_vs_rest * one_vs_rest - pairwise_sum;
}

template <typename Real>
Real concurrence_tangle(const SymmetricState<Real>& state, int focus = 1) {
  return concurrence_tangle(to_full_vector(state), focus);
}

/// Negativity tangle with a fixed focus qubit:
/// N^2(focus : rest) - sum_k N^2(focus, k).
template <typename Real>
Real negativity_tangle_focus(const PureStateVector<Real>& psi, int focus) {
  const int n = psi.n_qubits();
  require(n >= 3, "negativity_tangle: needs at least three qubits");
  if (focus < 1 || focus > n) throw std::out_of_range("negativity_tangle: focus out of range");
  const Real one_vs_rest = negativity_1_rest(partial_trace(psi, {focus}));
  Real pairwise_sum = 0;
  for (int k = 1; k <= n; ++k) {
    if (k == focus) continue;
    const Real neg = negativity_2q(partial_trace(psi, {focus, k}));
    pairwise_sum += neg * neg;
  }
  return one_vs_rest * one_vs_rest - pairwise_sum;
}

/// Average of the focus tangles over all N focus choices.
template <typename Real>
Real negativity_tangle(const PureStateVector<Real>& psi) {
  Real total = 0;
  for (int focus = 1; focus <= psi.n_qubits(); ++focus) {
    total += negativity_tangle_focus(psi, focus);
  }
  return total / Real(psi.n_qubits());
}

/// For permutation-invariant states every focus gives the same value, so the
/// average is the focus-1 tangle.
template <typename Real>
Real negativity_tangle(const SymmetricState<Real>& state) {
  return negativity_tangle_focus(to_full_vector(state), 1);
}

// ---------------------------------------------------------------------------
// closed forms for the W-class

template <typename Real>
Real closed_form_pairwise_concurrence(int n, Real theta) {
  require(n >= 3, "closed_form_pairwise_concurrence: needs at least three qubits");
  return (Real(1) - std::cos(theta)) / Real(n);
}

template <typename Real>
Real closed_form_one_vs_rest_concurrence(int n, Real theta) {
  require(n >= 2, "closed_form_one_vs_rest_concurrence: needs at least two qubits");
  return std::sqrt(Real(n - 1)) * (Real(1) - std::cos(theta)) / Real(n);
}

/// Negativity tangle of the N-qubit W state:
/// (N-1)/N^2 * (4 - [sqrt((N-2)^2 + 4) - (N-2)]^2).
template <typename Real = double>
Real wstate_negativity_tangle_closed(int n) {
  require(n >= 3, "wstate_negativity_tangle_closed: needs at least three qubits");
  const Real m = Real(n - 2);
  const Real gap = std::sqrt(m * m + Real(4)) - m;
  return Real(n - 1) / (Real(n) * Real(n)) * (Real(4) - gap * gap);
}

// ---------------------------------------------------------------------------
// reports

enum class MeasureKind { concurrence, negativity };

struct MeasureSet {
  double pairwise{};
  double one_vs_rest{};
  MeasureKind measure_kind{MeasureKind::concurrence};
};

/// Every measure of one W-class state, with deviations from the closed forms.
struct TangleReport {
  int n_qubits{};
  double theta{};
  MeasureSet concurrence_set{};
  MeasureSet negativity_set{MeasureSet{0, 0, MeasureKind::negativity}};
  double concurrence_tangle{};
  double negativity_tangle{};
  std::map<std::string, double> closed_form_residuals;
};

/// Analyzes cos(theta/2)|0..0> + sin(theta/2)|W_N> through the generic pipeline
/// and records |numeric - closed form| for the pairwise and one-vs-rest
/// concurrence, both marginals, the monogamy gap and, at theta = pi, the
/// W-state negativity tangle.
TangleReport analyze(int n, double theta);

}  // namespace wtangle
