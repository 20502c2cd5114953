#pragma once

// Ohm-law kernels and the two Helmholtz assemblies.
//
// Fourier convention: fields ~ exp(i k.r), so the left curl is curl_k(k) and
// the right-acting curl on r' is -curl_k(k) applied from the right. The sign
// is pinned by requiring helmholtz_bianisotropic_k(rs) ==
// helmholtz_generic_k(local_conductivity_k(rs)).

#include <functional>
#include <string>

#include "mqed/constants.hpp"
#include "mqed/media.hpp"

namespace mqed {

/// Q~(k, w) of a local homogeneous bianisotropic medium:
///   (i mu0 w)^-1 K (mu^-1 - I)(-K) + Z0^-1 K mu^-1 zeta
///   + Z0^-1 xi mu^-1 (-K) - i eps0 w (eps - xi mu^-1 zeta - I),  K = curl_k(k).
CTensor3 local_conductivity_k(const ResponseSet& rs, const Vector3d& k,
                              const PhysicalConstants& pc = PhysicalConstants::scaled());

/// k-space conductivity producer (k, w) -> Q~(k, w).
class ConductivityK {
 public:
  using Producer = std::function<CTensor3(const Vector3d&, cplx)>;

  ConductivityK(Producer producer, std::string provenance)
      : producer_(std::move(producer)), provenance_(std::move(provenance)) {}

  // Local form built from a parametric medium model.
  static ConductivityK local(const MediumModel& model,
                             const PhysicalConstants& pc = PhysicalConstants::scaled());

  // Hydrodynamic Drude electron gas: transverse i eps0 wp^2 / (w + i g), longitudinal
  // i eps0 w wp^2 / (w^2 + i g w - beta^2 k^2).
  static ConductivityK hydrodynamic_drude(double plasma_frequency, double damping, double beta,
                                          const PhysicalConstants& pc = PhysicalConstants::scaled());

  CTensor3 operator()(const Vector3d& k, cplx omega) const { return producer_(k, omega); }
  const std::string& provenance() const { return provenance_; }

 private:
  Producer producer_;
  std::string provenance_;
};

/// M(k, w) = (k^2 I - k k) - (w^2/c^2) I - i mu0 w Q~(k, w).
CTensor3 helmholtz_generic_k(const CTensor3& q, const Vector3d& k, cplx omega,
                             const PhysicalConstants& pc = PhysicalConstants::scaled());
CTensor3 helmholtz_generic_k(const ConductivityK& q, const Vector3d& k, cplx omega,
                             const PhysicalConstants& pc = PhysicalConstants::scaled());

/// M_bi = K mu^-1 K - (iw/c) K mu^-1 zeta + (iw/c) xi mu^-1 K
///        - (w^2/c^2)(eps - xi mu^-1 zeta), evaluated at rs.omega.
CTensor3 helmholtz_bianisotropic_k(const ResponseSet& rs, const Vector3d& k,
                                   const PhysicalConstants& pc = PhysicalConstants::scaled());

/// Gaussian-smeared Drude conductor on a Dirichlet box [0, L] discretized at
/// N interior points x_i = i h, h = L / (N + 1).
struct Nonlocal1DKernel {
  int n = 64;
  double length = 10.0;
  double smoothing = 0.8;         // Gaussian width l
  double plasma_frequency = 1.0;  // wp; 0 gives sigma == 0
  double damping = 0.1;           // Drude gamma

  double spacing() const { return length / (n + 1); }
  double position(int i) const { return (i + 1) * spacing(); }

  // sigma(w) = eps0 wp^2 / (gamma - i w).
  cplx sigma(cplx omega, const PhysicalConstants& pc = PhysicalConstants::scaled()) const;

  // Throws ResolutionError when N < 16 or l < 2h.
  void validate() const;

  // Normalized Gaussian Gram matrix g_l(x_i - x_j) h (real symmetric).
  Eigen::MatrixXd gram() const;

  CMatrix q_matrix(cplx omega, const PhysicalConstants& pc = PhysicalConstants::scaled()) const;
};

struct Helmholtz1D {
  CMatrix h;  // -D2 - (w^2/c^2) I - i mu0 w Q
  CMatrix q;
};

Helmholtz1D nonlocal_1d_matrices(const Nonlocal1DKernel& kern, cplx omega,
                                 const PhysicalConstants& pc = PhysicalConstants::scaled());

}  // namespace mqed
