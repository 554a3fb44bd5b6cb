#pragma once

#include <cmath>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "wtangle/core.hpp"

namespace wtangle {

/// Full 2^N amplitude vector. Qubit 1 is the most significant bit of the
/// basis index, qubit N the least significant.
template <typename Real = double>
class PureStateVector {
 public:
  PureStateVector(int n_qubits, CVector<Real> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {
    require(n_qubits >= 1 && n_qubits < 31, "PureStateVector: qubit count out of range");
    require(amps_.size() == (Eigen::Index{1} << n_qubits),
            "PureStateVector: amplitude count must be 2^n");
    require(std::abs(amps_.norm() - Real(1)) <= tolerance<Real>(1e-12),
            "PureStateVector: amplitudes must have unit norm");
  }

  /// Rescales arbitrary non-zero amplitudes to unit norm.
  static PureStateVector normalized(int n_qubits, const CVector<Real>& amps) {
    const Real norm = amps.norm();
    require(norm > Real(0), "PureStateVector: zero vector cannot be normalized");
    return PureStateVector(n_qubits, amps / norm);
  }

  int n_qubits() const { return n_qubits_; }
  const CVector<Real>& amps() const { return amps_; }
  Eigen::Index dim() const { return amps_.size(); }

 private:
  int n_qubits_;
  CVector<Real> amps_;
};

/// Square complex matrix, Hermitian to 1e-12 entrywise. Not necessarily
/// positive or trace one (holds partial transposes and spin flips).
template <typename Real = double>
class HermitianMatrix {
 public:
  explicit HermitianMatrix(CMatrix<Real> entries) : entries_(std::move(entries)) {
    require(entries_.rows() == entries_.cols() && entries_.rows() > 0,
            "HermitianMatrix: matrix must be square and non-empty");
    if (hermiticity_defect(entries_) > tolerance<Real>(1e-12)) {
      throw std::domain_error("HermitianMatrix: input is not Hermitian within tolerance");
    }
  }

  Eigen::Index dim() const { return entries_.rows(); }
  const CMatrix<Real>& matrix() const { return entries_; }
  Complex<Real> operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  Real trace() const { return entries_.trace().real(); }

 private:
  CMatrix<Real> entries_;
};

template <typename Real>
RVector<Real> hermitian_eigenvalues(const HermitianMatrix<Real>& m);

/// One- or two-qubit density matrix. Construction checks hermiticity and unit
/// trace to 1e-12. Eigenvalues below -1e-8 are rejected; those between -1e-8
/// and -1e-10 are accepted with `has_psd_warning()` set.
template <typename Real = double>
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix<Real> entries) : entries_(std::move(entries)) {
    require(entries_.rows() == entries_.cols(), "DensityMatrix: matrix must be square");
    require(entries_.rows() == 2 || entries_.rows() == 4,
            "DensityMatrix: only one- and two-qubit states are supported");
    if (hermiticity_defect(entries_) > tolerance<Real>(1e-12)) {
      throw std::domain_error("DensityMatrix: input is not Hermitian within tolerance");
    }
    if (std::abs(entries_.trace() - Complex<Real>(1)) > tolerance<Real>(1e-12)) {
      throw std::domain_error("DensityMatrix: trace differs from one");
    }
    const auto eig = hermitian_eigenvalues(as_hermitian());
    min_eigenvalue_ = eig(eig.size() - 1);
    if (min_eigenvalue_ < -tolerance<Real>(1e-8)) {
      throw std::domain_error("DensityMatrix: matrix is not positive semidefinite");
    }
  }

  Eigen::Index dim() const { return entries_.rows(); }
  int n_qubits() const { return dim() == 2 ? 1 : 2; }
  const CMatrix<Real>& matrix() const { return entries_; }
  Complex<Real> operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  Real min_eigenvalue() const { return min_eigenvalue_; }
  bool has_psd_warning() const { return min_eigenvalue_ < -tolerance<Real>(1e-10); }

  HermitianMatrix<Real> as_hermitian() const { return HermitianMatrix<Real>(entries_); }

 private:
  CMatrix<Real> entries_;
  Real min_eigenvalue_{};
};

// ---------------------------------------------------------------------------
// partial trace

template <typename Real>
DensityMatrix<Real> partial_trace(const PureStateVector<Real>& psi, std::span<const int> keep) {
  const int n = psi.n_qubits();
  require(keep.size() == 1 || keep.size() == 2, "partial_trace: keep one or two qubits");
  for (int q : keep) {
    if (q < 1 || q > n) throw std::out_of_range("partial_trace: qubit index out of range");
  }
  require(keep.size() == 1 || keep[0] != keep[1], "partial_trace: duplicate qubit index");

  std::vector<int> traced;
  for (int q = 1; q <= n; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  }
  const int n_keep = static_cast<int>(keep.size());
  const Eigen::Index keep_dim = Eigen::Index{1} << n_keep;
  const Eigen::Index rest_dim = Eigen::Index{1} << traced.size();

  // Reshape psi into a keep_dim x rest_dim matrix; rho = M M^dagger.
  CMatrix<Real> reshaped(keep_dim, rest_dim);
  for (Eigen::Index idx = 0; idx < psi.dim(); ++idx) {
    Eigen::Index row = 0;
    for (int j = 0; j < n_keep; ++j) {
      row = (row << 1) | ((idx >> (n - keep[j])) & 1);
    }
    Eigen::Index col = 0;
    for (int q : traced) {
      col = (col << 1) | ((idx >> (n - q)) & 1);
    }
    reshaped(row, col) = psi.amps()(idx);
  }
  CMatrix<Real> rho = reshaped * reshaped.adjoint();
  // Exact hermiticity: M M^dagger can pick up roundoff asymmetry.
  rho = (Real(0.5) * (rho + rho.adjoint())).eval();
  return DensityMatrix<Real>(std::move(rho));
}

template <typename Real>
DensityMatrix<Real> partial_trace(const PureStateVector<Real>& psi, std::initializer_list<int> keep) {
  return partial_trace(psi, std::span<const int>(keep.begin(), keep.size()));
}

// ---------------------------------------------------------------------------
// closed-form W-class marginals

/// Two-qubit marginal of cos(t/2)|0..0> + sin(t/2)|W_N>, basis {00,01,10,11}.
template <typename Real = double>
DensityMatrix<Real> closed_form_rho2(int n, Real theta) {
  require(n >= 3, "closed_form_rho2: requires at least three qubits");
  const Real nn = Real(n);
  const Real c = std::cos(theta);
  const Real off = std::sqrt(nn) * std::sin(theta);
  const Real low = Real(1) - c;
  CMatrix<Real> m = CMatrix<Real>::Zero(4, 4);
  m(0, 0) = Real(2) * (nn - Real(1) + c);
  m(0, 1) = m(1, 0) = m(0, 2) = m(2, 0) = off;
  m(1, 1) = m(1, 2) = m(2, 1) = m(2, 2) = low;
  m /= Real(2) * nn;
  return DensityMatrix<Real>(std::move(m));
}

/// Single-qubit marginal of the same family.
template <typename Real = double>
DensityMatrix<Real> closed_form_rho1(int n, Real theta) {
  require(n >= 2, "closed_form_rho1: requires at least two qubits");
  const Real nn = Real(n);
  const Real c = std::cos(theta);
  const Real off = std::sqrt(nn) * std::sin(theta);
  CMatrix<Real> m(2, 2);
  m << Real(2) * nn - Real(1) + c, off,
       off, Real(1) - c;
  m /= Real(2) * nn;
  return DensityMatrix<Real>(std::move(m));
}

// ---------------------------------------------------------------------------
// partial transpose, spin flip

/// Transposes the listed qubits (1-based) of a 2^n x 2^n operator: for each
/// listed qubit the row and column bits at that position are exchanged.
template <typename Derived>
auto partial_transpose_qubits(const Eigen::MatrixBase<Derived>& m, int n_qubits,
                              std::span<const int> qubits) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  require(m.rows() == m.cols() && m.rows() == (Eigen::Index{1} << n_qubits),
          "partial_transpose: matrix dimension must be 2^n");
  Eigen::Index mask = 0;
  for (int q : qubits) {
    if (q < 1 || q > n_qubits) throw std::out_of_range("partial_transpose: qubit index out of range");
    mask |= Eigen::Index{1} << (n_qubits - q);
  }
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Eigen::Index swapped = (i ^ j) & mask;
      out(i ^ swapped, j ^ swapped) = m(i, j);
    }
  }
  return out;
}

template <typename Real>
HermitianMatrix<Real> partial_transpose(const HermitianMatrix<Real>& m, int n_qubits,
                                        std::span<const int> qubits) {
  return HermitianMatrix<Real>(partial_transpose_qubits(m.matrix(), n_qubits, qubits));
}

/// Two-qubit partial transpose on the second qubit.
template <typename Real>
HermitianMatrix<Real> partial_transpose(const DensityMatrix<Real>& rho) {
  require(rho.dim() == 4, "partial_transpose: expects a two-qubit density matrix");
  static constexpr int second[] = {2};
  return HermitianMatrix<Real>(partial_transpose_qubits(rho.matrix(), 2, second));
}

template <typename Real>
CMatrix<Real> sigma_y_sigma_y() {
  CMatrix<Real> yy = CMatrix<Real>::Zero(4, 4);
  yy(0, 3) = yy(3, 0) = Real(-1);
  yy(1, 2) = yy(2, 1) = Real(1);
  return yy;
}

/// (sigma_y x sigma_y) rho^* (sigma_y x sigma_y)
template <typename Real>
HermitianMatrix<Real> spin_flip(const DensityMatrix<Real>& rho) {
  require(rho.dim() == 4, "spin_flip: expects a two-qubit density matrix");
  const CMatrix<Real> yy = sigma_y_sigma_y<Real>();
  return HermitianMatrix<Real>(yy * rho.matrix().conjugate() * yy);
}

// ---------------------------------------------------------------------------
// spectra

/// Real eigenvalues, sorted descending.
template <typename Real>
RVector<Real> hermitian_eigenvalues(const HermitianMatrix<Real>& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(m.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  }
  return solver.eigenvalues().reverse();
}

namespace detail {

/// Columns sqrt(p_i) v_i over the eigenpairs of rho with p_i above the rank
/// cutoff, so that rho = V V^dagger up to discarded roundoff.
template <typename Real>
CMatrix<Real> weighted_eigenvectors(const DensityMatrix<Real>& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(rho.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("weighted_eigenvectors: eigensolver did not converge");
  }
  const Real cutoff = Real(500) * std::numeric_limits<Real>::epsilon();
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    if (solver.eigenvalues()(i) > cutoff) kept.push_back(i);
  }
  CMatrix<Real> v(rho.dim(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    v.col(static_cast<Eigen::Index>(c)) =
        std::sqrt(solver.eigenvalues()(kept[c])) * solver.eigenvectors().col(kept[c]);
  }
  return v;
}

template <typename Real>
RVector<Real> pad_descending(const RVector<Real>& values, Eigen::Index size) {
  RVector<Real> out = RVector<Real>::Zero(size);
  out.head(values.size()) = values;
  std::sort(out.data(), out.data() + out.size(), std::greater<Real>());
  return out;
}

}  // namespace detail

/// Eigenvalues of the product a*b for a positive semidefinite `a`. With
/// a = V V^dagger the non-zero spectrum of a*b is that of the Hermitian
/// V^dagger b V, so the result is real by construction; the remaining
/// eigenvalues are exactly zero. Values in [-1e-10, 0) are clipped to zero,
/// anything lower means `b` was not positive on the support of `a`.
template <typename Real>
RVector<Real> product_eigenvalues(const DensityMatrix<Real>& a, const HermitianMatrix<Real>& b) {
  require(a.dim() == 4 && b.dim() == 4, "product_eigenvalues: expects 4x4 operands");
  const CMatrix<Real> v = detail::weighted_eigenvectors(a);
  RVector<Real> support(0);
  if (v.cols() > 0) {
    CMatrix<Real> compressed = v.adjoint() * b.matrix() * v;
    compressed = (Real(0.5) * (compressed + compressed.adjoint())).eval();
    support = hermitian_eigenvalues(HermitianMatrix<Real>(compressed));
  }
  RVector<Real> out = detail::pad_descending(support, 4);
  for (auto& value : out) {
    if (value < -tolerance<Real>(1e-10)) {
      throw std::domain_error("product_eigenvalues: negative eigenvalue beyond tolerance");
    }
    value = std::max(value, Real(0));
  }
  return out;
}

/// Square roots of the eigenvalues of rho * spin_flip(rho), descending,
/// computed as singular values of V^T (Y x Y) V with rho = V V^dagger.
/// Avoids taking square roots of roundoff-level eigenvalues.
template <typename Real>
RVector<Real> spin_flip_singular_values(const DensityMatrix<Real>& rho) {
  require(rho.dim() == 4, "spin_flip_singular_values: expects a two-qubit density matrix");
  const CMatrix<Real> v = detail::weighted_eigenvectors(rho);
  RVector<Real> support(0);
  if (v.cols() > 0) {
    const CMatrix<Real> tau = v.transpose() * sigma_y_sigma_y<Real>() * v;
    Eigen::JacobiSVD<CMatrix<Real>> svd(tau);
    support = svd.singularValues();
  }
  return detail::pad_descending(support, 4);
}

/// Sum of singular values; for Hermitian input, the sum of |eigenvalues|.
template <typename Real>
Real trace_norm(const HermitianMatrix<Real>& m) {
  return hermitian_eigenvalues(m).cwiseAbs().sum();
}

template <typename Real>
Real determinant(const DensityMatrix<Real>& rho) {
  if (rho.dim() == 2) {
    return rho(0, 0).real() * rho(1, 1).real() - std::norm(rho(0, 1));
  }
  return rho.matrix().determinant().real();
}

}  // namespace wtangle
