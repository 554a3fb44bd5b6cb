#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace wtangle {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using CVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using CMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

/// Nominal tolerances are stated for double precision. Narrower scalar types
/// get a floor of a few dozen ulps so the same checks stay meaningful.
template <typename Real>
constexpr Real tolerance(double nominal) {
  return std::max(static_cast<Real>(nominal),
                  Real(64) * std::numeric_limits<Real>::epsilon());
}

template <typename Real>
constexpr Real two_pi = Real(2) * std::numbers::pi_v<Real>;

/// Exact binomial coefficient; valid while the result fits in 64 bits.
constexpr std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

/// Largest entrywise |M - M^dagger|.
template <typename Derived>
auto hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace wtangle
