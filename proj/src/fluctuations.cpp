#include "mqed/fluctuations.hpp"

namespace mqed {

namespace detail {

void require_positive_real_frequency(cplx omega, const char* op) {
  if (omega.imag() != 0.0 || !(omega.real() > 0.0)) {
    throw InvalidInput(std::string(op) + ": frequency must be real and positive");
  }
}

}  // namespace detail

CMatrix6 noise_pm_covariance(const ResponseSet& rs, const PhysicalConstants& pc) {
  detail::require_positive_real_frequency(rs.omega, "noise_pm_covariance");
  const CTensor3 mi = mu_inverse(rs);
  const cplx two_i_z0(0.0, 2.0 * pc.Z0);

  CMatrix6 c;
  c.topLeftCorner<3, 3>() = pc.eps0 * antihermitian_part(rs.eps - rs.xi * mi * rs.zeta);
  c.topRightCorner<3, 3>() = (rs.zeta.adjoint() * mi.adjoint() - rs.xi * mi) / two_i_z0;
  c.bottomLeftCorner<3, 3>() = -(mi * rs.zeta - mi.adjoint() * rs.xi.adjoint()) / two_i_z0;
  c.bottomRightCorner<3, 3>() = -antihermitian_part(mi) / pc.mu0;
  // Exact Hermiticity; the blocks above agree up to roundoff.
  return hermitian_part(c);
}

CMatrix6 noise_root(const ResponseSet& rs, const PhysicalConstants& pc) {
  const CMatrix6 c = noise_pm_covariance(rs, pc);
  try {
    return psd_root(c);
  } catch (const NotPositiveSemidefinite& e) {
    throw NonPassiveMedium("noise covariance is not positive semidefinite (non-passive medium): " +
                               std::string(e.what()),
                           e.min_eigenvalue());
  }
}

CTensor3 current_covariance_from_noise_k(const ResponseSet& rs, const Vector3d& k,
                                         const PhysicalConstants& pc) {
  const CMatrix6 c = noise_pm_covariance(rs, pc);
  // The P-M blocks as assembled pair with -curl for the magnetization term.
  Eigen::Matrix<cplx, 3, 6> j;
  j.leftCols<3>() = cplx(0.0, -rs.omega.real()) * CTensor3::Identity();
  j.rightCols<3>() = -curl_k(k);
  return pc.hbar / std::numbers::pi * j * c * j.adjoint();
}

double integral_relation_residual_1d(const Nonlocal1DKernel& kern, double omega,
                                     const PhysicalConstants& pc) {
  detail::require_positive_real_frequency(omega, "integral_relation_residual_1d");
  const Green1D green = solve_green_1d(kern, omega, pc);
  const CMatrix q = kern.q_matrix(omega, pc);
  const CMatrix lhs =
      pc.mu0 * omega * green.spacing * green.g * hermitian_part(q) * green.g.adjoint();
  const CMatrix rhs = antihermitian_part(green.g);
  return relative_residual((lhs - rhs).norm(), rhs.norm());
}

CMatrix field_spectrum_from_noise_1d(const Nonlocal1DKernel& kern, double omega,
                                     const PhysicalConstants& pc) {
  detail::require_positive_real_frequency(omega, "field_spectrum_from_noise_1d");
  const Green1D green = solve_green_1d(kern, omega, pc);
  const CMatrix q = kern.q_matrix(omega, pc);
  return pc.hbar / std::numbers::pi * pc.mu0 * pc.mu0 * omega * omega * omega * green.spacing *
         green.g * hermitian_part(q) * green.g.adjoint();
}

}  // namespace mqed
