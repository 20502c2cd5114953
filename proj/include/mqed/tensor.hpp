#pragma once

// Dense complex tensor algebra shared by every module: generalized real and
// imaginary parts, Hermiticity and positive-semidefiniteness tests, Hermitian
// square roots. All routines accept any square Eigen expression.

#include <algorithm>
#include <complex>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "mqed/errors.hpp"

namespace mqed {

using cplx = std::complex<double>;
using CTensor3 = Eigen::Matrix3cd;
using CMatrix = Eigen::MatrixXcd;
using Vector3c = Eigen::Vector3cd;
using Eigen::Vector3d;

// Relative Hermiticity tolerance for inputs of is_psd/psd_root.
inline constexpr double kTolHerm = 1e-10;
// Eigenvalue floor, relative to the largest eigenvalue magnitude.
inline constexpr double kTolPsd = 1e-10;

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* op) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw InvalidInput(std::string(op) + ": expected a non-empty square matrix, got " +
                       std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}  // namespace detail

// ||diff|| / ||ref||, falling back to the absolute norm when ||ref|| < 1e-14.
inline double relative_residual(double diff_norm, double ref_norm) {
  return ref_norm < 1e-14 ? diff_norm : diff_norm / ref_norm;
}

/// Generalized real part (A + A^dag)/2. For a discretized two-point kernel the
/// conjugate transpose of the full matrix realizes the argument exchange.
template <typename Derived>
typename Derived::PlainObject hermitian_part(const Eigen::MatrixBase<Derived>& a) {
  detail::require_square(a, "hermitian_part");
  using Scalar = typename Derived::Scalar;
  typename Derived::PlainObject out = (a + a.adjoint()) / Scalar(2);
  return out;
}

/// Generalized imaginary part (A - A^dag)/(2i); itself a Hermitian matrix.
template <typename Derived>
typename Derived::PlainObject antihermitian_part(const Eigen::MatrixBase<Derived>& a) {
  detail::require_square(a, "antihermitian_part");
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  typename Derived::PlainObject out = (a - a.adjoint()) / Scalar(Real(0), Real(2));
  return out;
}

// ||A - A^dag|| / ||A||.
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
  detail::require_square(a, "hermiticity_defect");
  return relative_residual((a - a.adjoint()).norm(), a.norm());
}

template <typename Derived>
double spectral_norm(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<typename Derived::PlainObject> svd(a);
  return svd.singularValues()(0);
}

struct PsdReport {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double max_abs_eigenvalue = 0.0;
};

/// Eigenvalue test of a Hermitian matrix: psd iff min eigenvalue >= -tol
/// (absolute). The minimum eigenvalue is always reported.
template <typename Derived>
PsdReport is_psd(const Eigen::MatrixBase<Derived>& a, double tol) {
  detail::require_square(a, "is_psd");
  if (!(tol >= 0.0)) throw InvalidInput("is_psd: tolerance must be non-negative");
  if (hermiticity_defect(a) > kTolHerm) {
    throw InvalidInput("is_psd: matrix is not Hermitian (relative defect " +
                       std::to_string(hermiticity_defect(a)) + ")");
  }
  const typename Derived::PlainObject h = hermitian_part(a);
  Eigen::SelfAdjointEigenSolver<typename Derived::PlainObject> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw SolverError("is_psd: eigendecomposition failed");
  const auto& ev = es.eigenvalues();
  PsdReport r;
  r.min_eigenvalue = ev.minCoeff();
  r.max_abs_eigenvalue = ev.cwiseAbs().maxCoeff();
  r.psd = r.min_eigenvalue >= -tol;
  return r;
}

// is_psd with the floor scaled by the largest eigenvalue magnitude.
template <typename Derived>
PsdReport is_psd_relative(const Eigen::MatrixBase<Derived>& a, double rel_tol = kTolPsd) {
  PsdReport r = is_psd(a, 0.0);
  r.psd = r.min_eigenvalue >= -rel_tol * r.max_abs_eigenvalue;
  return r;
}

/// Principal Hermitian root R = V sqrt(max(L, 0)) V^dag with R R^dag = A.
/// Negative eigenvalues within kTolPsd of the spectral radius are clipped;
/// anything below throws NotPositiveSemidefinite carrying the eigenvalue.
template <typename Derived>
typename Derived::PlainObject psd_root(const Eigen::MatrixBase<Derived>& a) {
  using Plain = typename Derived::PlainObject;
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  detail::require_square(a, "psd_root");
  if (hermiticity_defect(a) > kTolHerm) {
    throw InvalidInput("psd_root: matrix is not Hermitian (relative defect " +
                       std::to_string(hermiticity_defect(a)) + ")");
  }
  const Plain h = hermitian_part(a);
  Eigen::SelfAdjointEigenSolver<Plain> es(h);
  if (es.info() != Eigen::Success) throw SolverError("psd_root: eigendecomposition failed");
  const auto& ev = es.eigenvalues();
  const Real floor = -Real(kTolPsd) * ev.cwiseAbs().maxCoeff();
  if (ev.minCoeff() < floor) {
    throw NotPositiveSemidefinite("psd_root: matrix has eigenvalue " +
                                      std::to_string(static_cast<double>(ev.minCoeff())) +
                                      " below the PSD tolerance",
                                  static_cast<double>(ev.minCoeff()));
  }
  const auto roots = ev.cwiseMax(Real(0)).cwiseSqrt();
  Plain r = es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
  return r;
}

// [v]x, the matrix with cross_matrix(v) * w = v x w.
inline Eigen::Matrix3d cross_matrix(const Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
       -v.y(), v.x(), 0.0;
  return m;
}

// Fourier image of the left curl: (ik) x. Hermitian since [k]x is real
// antisymmetric. The right-acting curl maps to -curl_k(k) multiplied from the
// right.
inline CTensor3 curl_k(const Vector3d& k) { return cplx(0.0, 1.0) * cross_matrix(k).cast<cplx>(); }

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  return a.allFinite();
}

}  // namespace mqed
