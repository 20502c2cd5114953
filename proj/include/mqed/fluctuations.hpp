#pragma once

// Covariance-level quantization. Operators are represented by the c-number
// kernels of their commutators; every kernel below omits the delta functions
// in frequency (and position, for local media).
//
// The current commutator kernel (hbar w / pi) ReQ and the ground-state
// anticommutator kernel (hbar / pi) Im[i w Q] coincide at real w, so
// current_covariance_k serves both.

#include <numbers>

#include "mqed/green.hpp"

namespace mqed {

/// 6x6 covariance of (P_N, M_N), without the hbar/pi prefactor:
///   [ eps0 ImH(eps - xi mu^-1 zeta)                 (zeta^dag mu^-dag - xi mu^-1)/(2i Z0) ]
///   [ -(mu^-1 zeta - mu^-dag xi^dag)/(2i Z0)        -ImH(mu^-1)/mu0                       ]
/// Requires a real rs.omega > 0.
CMatrix6 noise_pm_covariance(const ResponseSet& rs,
                             const PhysicalConstants& pc = PhysicalConstants::scaled());

/// Hermitian root R with R R^dag = noise_pm_covariance(rs). Throws
/// NonPassiveMedium (carrying the minimum eigenvalue) when the covariance is
/// not PSD to 1e-10 of its spectral radius.
CMatrix6 noise_root(const ResponseSet& rs, const PhysicalConstants& pc = PhysicalConstants::scaled());

/// Noise-current covariance from polarization/magnetization noise:
/// (hbar/pi) J C J^dag with j_N = -i w P_N + K M_N.
CTensor3 current_covariance_from_noise_k(const ResponseSet& rs, const Vector3d& k,
                                         const PhysicalConstants& pc = PhysicalConstants::scaled());

namespace detail {
void require_positive_real_frequency(cplx omega, const char* op);
}

/// (hbar w / pi) ReH(Q~(k, w)) at real w > 0.
template <KSpaceMedium Medium>
CTensor3 current_covariance_k(const Medium& medium, const Vector3d& k, double omega,
                              const PhysicalConstants& pc = PhysicalConstants::scaled()) {
  detail::require_positive_real_frequency(omega, "current_covariance_k");
  return pc.hbar * omega / std::numbers::pi * hermitian_part(conductivity_k(medium, k, omega, pc));
}

/// Relative residual of mu0 w G ReH(Q) G^dag = ImH(G) in k space.
template <KSpaceMedium Medium>
double integral_relation_residual_k(const Medium& medium, const Vector3d& k, double omega,
                                    const PhysicalConstants& pc = PhysicalConstants::scaled()) {
  detail::require_positive_real_frequency(omega, "integral_relation_residual_k");
  const CTensor3 g = solve_green_k(medium, k, omega, pc).g;
  const CTensor3 q = conductivity_k(medium, k, omega, pc);
  const CTensor3 lhs = pc.mu0 * omega * g * hermitian_part(q) * g.adjoint();
  const CTensor3 rhs = antihermitian_part(g);
  return relative_residual((lhs - rhs).norm(), rhs.norm());
}

/// Discrete form: mu0 w h G ReH(Q) G^dag = ImH(G), with H G = I/h and Q
/// carrying its own quadrature weight.
double integral_relation_residual_1d(const Nonlocal1DKernel& kern, double omega,
                                     const PhysicalConstants& pc = PhysicalConstants::scaled());

// Floor, relative to the scale of (hbar mu0 w^2 / pi) G, below which a
// spectrum eigenvalue is treated as a fault.
inline constexpr double kSpectrumPsdTol = 1e-10;

/// Field spectrum (hbar mu0 w^2 / pi) ImH(G); validated Hermitian PSD,
/// otherwise InternalConsistencyError.
template <typename Derived>
typename Derived::PlainObject field_fluctuation_spectrum(
    const Eigen::MatrixBase<Derived>& g, double omega,
    const PhysicalConstants& pc = PhysicalConstants::scaled()) {
  detail::require_positive_real_frequency(omega, "field_fluctuation_spectrum");
  const double prefactor = pc.hbar * pc.mu0 * omega * omega / std::numbers::pi;
  typename Derived::PlainObject s = prefactor * antihermitian_part(g);
  const PsdReport r = is_psd(s, kSpectrumPsdTol * prefactor * g.norm());
  if (!r.psd) {
    throw InternalConsistencyError("field spectrum has eigenvalue " +
                                   std::to_string(r.min_eigenvalue) +
                                   " below the PSD tolerance (solver or model fault)");
  }
  return s;
}

/// Second route: (hbar/pi) mu0^2 w^3 G ReH(Q) G^dag.
template <KSpaceMedium Medium>
CTensor3 field_spectrum_from_noise_k(const Medium& medium, const Vector3d& k, double omega,
                                     const PhysicalConstants& pc = PhysicalConstants::scaled()) {
  detail::require_positive_real_frequency(omega, "field_spectrum_from_noise_k");
  const CTensor3 g = solve_green_k(medium, k, omega, pc).g;
  const CTensor3 q = conductivity_k(medium, k, omega, pc);
  return pc.hbar / std::numbers::pi * pc.mu0 * pc.mu0 * omega * omega * omega * g *
         hermitian_part(q) * g.adjoint();
}

CMatrix field_spectrum_from_noise_1d(const Nonlocal1DKernel& kern, double omega,
                                     const PhysicalConstants& pc = PhysicalConstants::scaled());

}  // namespace mqed
