#pragma once

#include <concepts>

#include "mqed/conductivity.hpp"

namespace mqed {

using CMatrix6 = Eigen::Matrix<cplx, 6, 6>;

// Helmholtz operator and conductivity for each supported medium description.
// A ResponseSet is frozen at rs.omega; asking for any other frequency throws.
CTensor3 helmholtz_k(const MediumModel& model, const Vector3d& k, cplx omega,
                     const PhysicalConstants& pc = PhysicalConstants::scaled());
CTensor3 helmholtz_k(const ConductivityK& q, const Vector3d& k, cplx omega,
                     const PhysicalConstants& pc = PhysicalConstants::scaled());
CTensor3 helmholtz_k(const ResponseSet& rs, const Vector3d& k, cplx omega,
                     const PhysicalConstants& pc = PhysicalConstants::scaled());

CTensor3 conductivity_k(const MediumModel& model, const Vector3d& k, cplx omega,
                        const PhysicalConstants& pc = PhysicalConstants::scaled());
CTensor3 conductivity_k(const ConductivityK& q, const Vector3d& k, cplx omega,
                        const PhysicalConstants& pc = PhysicalConstants::scaled());
CTensor3 conductivity_k(const ResponseSet& rs, const Vector3d& k, cplx omega,
                        const PhysicalConstants& pc = PhysicalConstants::scaled());

template <typename T>
concept KSpaceMedium = requires(const T& m, const Vector3d& k, cplx w, const PhysicalConstants& pc) {
  { helmholtz_k(m, k, w, pc) } -> std::convertible_to<CTensor3>;
  { conductivity_k(m, k, w, pc) } -> std::convertible_to<CTensor3>;
};

struct GreenK {
  CTensor3 g;
  CTensor3 helmholtz;
  double right_residual = 0.0;  // ||M G - I|| / ||I||
  double left_residual = 0.0;   // ||G M - I|| / ||I||
};

// Solves within sigma_min / sigma_max < kOnShellTol are refused.
inline constexpr double kOnShellTol = 1e-8;

/// G~ = M^-1 with both inverse residuals. Throws SingularityError near a
/// real propagating pole instead of regularizing.
GreenK solve_green_k(const CTensor3& helmholtz, const Vector3d& k, cplx omega);

template <KSpaceMedium Medium>
GreenK solve_green_k(const Medium& medium, const Vector3d& k, cplx omega,
                     const PhysicalConstants& pc = PhysicalConstants::scaled()) {
  return solve_green_k(helmholtz_k(medium, k, omega, pc), k, omega);
}

struct Green1D {
  CMatrix g;             // H G = I / h
  double spacing = 0.0;
  double residual = 0.0;  // ||H G - I/h|| / ||I/h||
};

Green1D solve_green_1d(const Nonlocal1DKernel& kern, cplx omega,
                       const PhysicalConstants& pc = PhysicalConstants::scaled());

struct GreenBlocks {
  CTensor3 ee;
  CTensor3 em;
  CTensor3 me;
  CTensor3 mm;
};

/// ee = (iw/c) G (iw/c), em = (iw/c) G (-K), me = K G (iw/c), mm = K G (-K).
GreenBlocks green_blocks_k(const CTensor3& g, const Vector3d& k, cplx omega,
                           const PhysicalConstants& pc = PhysicalConstants::scaled());

/// The 6x6 map (E, Z0 H) = -c G6 (Z0 P_N, mu0 M_N):
///   [ ee                    em                       ]
///   [ mu^-1(me - zeta ee)   mu^-1(mm - zeta em) + I  ]
CMatrix6 green_block_matrix(const GreenBlocks& blocks, const ResponseSet& rs);

/// ||G~^T(-k, w) - G~(k, w)|| / ||G~(k, w)||.
template <KSpaceMedium Medium>
double onsager_residual(const Medium& medium, const Vector3d& k, cplx omega,
                        const PhysicalConstants& pc = PhysicalConstants::scaled()) {
  const CTensor3 g = solve_green_k(medium, k, omega, pc).g;
  const CTensor3 g_reversed = solve_green_k(medium, Vector3d(-k), omega, pc).g;
  return relative_residual((g_reversed.transpose() - g).norm(), g.norm());
}

/// Operator norm of (w^2/c^2) G~(k, w) + I; decays to zero as w grows.
template <KSpaceMedium Medium>
double asymptote_residual(const Medium& medium, const Vector3d& k, double omega_large,
                          const PhysicalConstants& pc = PhysicalConstants::scaled()) {
  const CTensor3 g = solve_green_k(medium, k, cplx(omega_large, 0.0), pc).g;
  const double w_c = omega_large / pc.c;
  return spectral_norm(CTensor3(w_c * w_c * g + CTensor3::Identity()));
}

}  // namespace mqed
