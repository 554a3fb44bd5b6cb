#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "wtangle/core.hpp"
#include "wtangle/densmat.hpp"

namespace wtangle {

/// Single-qubit state c0|0> + c1|1>, unit norm.
template <typename Real = double>
class Spinor {
 public:
  Spinor(Complex<Real> c0, Complex<Real> c1) : c0_(c0), c1_(c1) {
    require(std::abs(std::norm(c0) + std::norm(c1) - Real(1)) <= tolerance<Real>(1e-12),
            "Spinor: amplitudes must have unit norm");
  }

  Complex<Real> c0() const { return c0_; }
  Complex<Real> c1() const { return c1_; }

 private:
  Complex<Real> c0_;
  Complex<Real> c1_;
};

/// Bloch-sphere spinor cos(beta/2) e^{-i alpha/2}|0> + sin(beta/2) e^{i alpha/2}|1>.
template <typename Real>
Spinor<Real> make_spinor(Real alpha, Real beta) {
  return Spinor<Real>(std::polar(std::cos(beta / 2), -alpha / 2),
                      std::polar(std::sin(beta / 2), alpha / 2));
}

/// Permutation-invariant N-qubit pure state in the Dicke basis. Entry r is
/// the amplitude of the Dicke state with r excitations (r qubits in |1>),
/// binomial weight included, so the coefficients have unit Euclidean norm.
template <typename Real = double>
class SymmetricState {
 public:
  explicit SymmetricState(CVector<Real> dicke_coeffs) : coeffs_(std::move(dicke_coeffs)) {
    require(coeffs_.size() >= 3, "SymmetricState: needs at least two qubits");
    require(std::abs(coeffs_.norm() - Real(1)) <= tolerance<Real>(1e-12),
            "SymmetricState: Dicke coefficients must have unit norm");
  }

  int n_qubits() const { return static_cast<int>(coeffs_.size()) - 1; }
  const CVector<Real>& dicke_coeffs() const { return coeffs_; }
  Complex<Real> operator[](int r) const { return coeffs_(r); }

  /// Bare Majorana-expansion coefficient with the binomial weight divided out.
  Complex<Real> alpha(int r) const {
    return coeffs_(r) / std::sqrt(static_cast<Real>(binomial(n_qubits(), r)));
  }

 private:
  CVector<Real> coeffs_;
};

struct WClassParams {
  int n_qubits;
  double theta;

  WClassParams(int n, double t) : n_qubits(n), theta(t) {
    require(n >= 2, "WClassParams: needs at least two qubits");
    require(t > 0.0 && t <= two_pi<double> + tolerance<double>(1e-12),
            "WClassParams: theta must lie in (0, 2pi]");
  }
};

/// Multiplicities of the distinct Majorana spinors, sorted non-increasing.
struct DegeneracyConfig {
  std::vector<int> parts;

  explicit DegeneracyConfig(std::vector<int> p);

  int n_qubits() const;
  int distinct_spinors() const { return static_cast<int>(parts.size()); }
  /// e.g. "D_{2,1}"
  std::string label() const;

  friend bool operator==(const DegeneracyConfig&, const DegeneracyConfig&) = default;
};

/// Partitions of n into exactly r positive parts, lexicographically descending.
std::vector<DegeneracyConfig> enumerate_slocc_configs(int n, int r);

/// p(n, r) via the recurrence p(n, r) = p(n-1, r-1) + p(n-r, r).
std::uint64_t partition_count(int n, int r);

/// p(n), all partitions of n.
std::uint64_t partition_count(int n);

namespace detail {

template <typename Real>
Complex<Real> int_pow(Complex<Real> base, int exponent) {
  Complex<Real> out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

/// Multiplies by e^{-i arg} of the first non-negligible entry.
template <typename Real>
void fix_global_phase(CVector<Real>& coeffs) {
  for (Eigen::Index r = 0; r < coeffs.size(); ++r) {
    if (std::abs(coeffs(r)) > tolerance<Real>(1e-12)) {
      if (coeffs(r).imag() != Real(0) || coeffs(r).real() < Real(0)) {
        coeffs *= std::polar(Real(1), -std::arg(coeffs(r)));
        coeffs(r) = Complex<Real>(std::abs(coeffs(r)), Real(0));
      }
      return;
    }
  }
}

}  // namespace detail

/// Symmetric state with N-k copies of |0> and k copies of d0|0> + d1|1>,
/// up to the local unitary that maps the first spinor to |0>. The
/// normalization is fixed numerically; the first non-zero coefficient is
/// made real non-negative.
template <typename Real>
SymmetricState<Real> dnk_state(int n, int k, Complex<Real> d0, Complex<Real> d1) {
  require(n >= 2, "dnk_state: needs at least two qubits");
  require(k >= 1 && k <= n / 2, "dnk_state: k must satisfy 1 <= k <= n/2");
  require(std::abs(std::norm(d0) + std::norm(d1) - Real(1)) <= tolerance<Real>(1e-12),
          "dnk_state: (d0, d1) must have unit norm");
  require(std::abs(d1) > tolerance<Real>(1e-12),
          "dnk_state: d1 = 0 gives a separable state, not a two-spinor class");

  CVector<Real> coeffs = CVector<Real>::Zero(n + 1);
  for (int r = 0; r <= k; ++r) {
    // (N-r)! / ((N-k)! (k-r)!) = C(N-r, k-r)
    const Real weight = static_cast<Real>(binomial(n - r, k - r)) *
                        std::sqrt(static_cast<Real>(binomial(n, r)));
    coeffs(r) = weight * detail::int_pow(d0, k - r) * detail::int_pow(d1, r);
  }
  detail::fix_global_phase(coeffs);
  coeffs /= coeffs.norm();
  return SymmetricState<Real>(std::move(coeffs));
}

/// cos(theta/2)|0...0> + sin(theta/2)|W_N>. theta = 0 (mod 2pi) is accepted
/// and yields the separable |0...0>; see `is_separable`.
template <typename Real>
SymmetricState<Real> wclass_state(int n, Real theta) {
  require(n >= 2, "wclass_state: needs at least two qubits");
  require(theta >= Real(0) && theta <= two_pi<Real> + tolerance<Real>(1e-12),
          "wclass_state: theta must lie in [0, 2pi]");
  CVector<Real> coeffs = CVector<Real>::Zero(n + 1);
  coeffs(0) = std::cos(theta / 2);
  coeffs(1) = std::sin(theta / 2);
  return SymmetricState<Real>(std::move(coeffs));
}

/// Reduces a|0..0> + b|W_N> to the one-parameter form by discarding the global
/// phase and absorbing the relative phase of b into |1>. Returns theta in [0, pi].
template <typename Real>
Real canonicalize_ab(Complex<Real> a, Complex<Real> b) {
  require(std::abs(std::norm(a) + std::norm(b) - Real(1)) <= tolerance<Real>(1e-12),
          "canonicalize_ab: (a, b) must have unit norm");
  return Real(2) * std::atan2(std::abs(b), std::abs(a));
}

/// Single-qubit marginal computed directly from the Dicke coefficients.
template <typename Real>
DensityMatrix<Real> symmetric_rho1(const SymmetricState<Real>& state) {
  const int n = state.n_qubits();
  const Real nn = Real(n);
  Real p0 = 0, p1 = 0;
  Complex<Real> off(0);
  for (int r = 0; r <= n; ++r) {
    const Real w = std::norm(state[r]);
    p0 += w * Real(n - r) / nn;
    p1 += w * Real(r) / nn;
    if (r < n) {
      off += state[r] * std::conj(state[r + 1]) * std::sqrt(Real(n - r) * Real(r + 1)) / nn;
    }
  }
  CMatrix<Real> m(2, 2);
  m << Complex<Real>(p0), off, std::conj(off), Complex<Real>(p1);
  return DensityMatrix<Real>(std::move(m));
}

/// A symmetric pure state is a product state iff its one-qubit marginal is
/// pure. Roundoff in the determinant is ~1e-16, so 2 sqrt(det) is resolved to
/// about 1e-8.
template <typename Real>
bool is_separable(const SymmetricState<Real>& state) {
  const Real det = std::max(determinant(symmetric_rho1(state)), Real(0));
  return Real(2) * std::sqrt(det) <= tolerance<Real>(1e-7);
}

inline constexpr int kDefaultQubitCap = 20;

/// Expands to 2^N amplitudes: every basis index with r set bits carries
/// dicke_coeffs[r] / sqrt(C(N, r)).
template <typename Real>
PureStateVector<Real> to_full_vector(const SymmetricState<Real>& state,
                                     int max_qubits = kDefaultQubitCap) {
  const int n = state.n_qubits();
  if (n > max_qubits) {
    throw std::length_error("to_full_vector: qubit count exceeds the configured cap");
  }
  std::vector<Complex<Real>> per_weight(n + 1);
  for (int r = 0; r <= n; ++r) {
    per_weight[r] = state[r] / std::sqrt(static_cast<Real>(binomial(n, r)));
  }
  CVector<Real> amps(Eigen::Index{1} << n);
  for (Eigen::Index idx = 0; idx < amps.size(); ++idx) {
    amps(idx) = per_weight[std::popcount(static_cast<std::uint64_t>(idx))];
  }
  return PureStateVector<Real>(n, std::move(amps));
}

}  // namespace wtangle
