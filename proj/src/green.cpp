#include "mqed/green.hpp"

#include <sstream>

namespace mqed {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_frozen_frequency(const ResponseSet& rs, cplx omega) {
  if (std::abs(omega - rs.omega) > 1e-14 * std::max(1.0, std::abs(rs.omega))) {
    throw InvalidInput("ResponseSet is frozen at a different frequency than requested");
  }
}

std::string describe(const Vector3d& k, cplx omega) {
  std::ostringstream os;
  os.precision(12);
  os << "k = (" << k.x() << ", " << k.y() << ", " << k.z() << "), omega = " << omega.real()
     << (omega.imag() < 0 ? " - " : " + ") << std::abs(omega.imag()) << "i";
  return os.str();
}

}  // namespace

CTensor3 helmholtz_k(const MediumModel& model, const Vector3d& k, cplx omega,
                     const PhysicalConstants& pc) {
  return helmholtz_bianisotropic_k(evaluate(model, omega), k, pc);
}

CTensor3 helmholtz_k(const ConductivityK& q, const Vector3d& k, cplx omega,
                     const PhysicalConstants& pc) {
  return helmholtz_generic_k(q, k, omega, pc);
}

CTensor3 helmholtz_k(const ResponseSet& rs, const Vector3d& k, cplx omega,
                     const PhysicalConstants& pc) {
  require_frozen_frequency(rs, omega);
  return helmholtz_bianisotropic_k(rs, k, pc);
}

CTensor3 conductivity_k(const MediumModel& model, const Vector3d& k, cplx omega,
                        const PhysicalConstants& pc) {
  return local_conductivity_k(evaluate(model, omega), k, pc);
}

CTensor3 conductivity_k(const ConductivityK& q, const Vector3d& k, cplx omega,
                        const PhysicalConstants&) {
  return q(k, omega);
}

CTensor3 conductivity_k(const ResponseSet& rs, const Vector3d& k, cplx omega,
                        const PhysicalConstants& pc) {
  require_frozen_frequency(rs, omega);
  return local_conductivity_k(rs, k, pc);
}

GreenK solve_green_k(const CTensor3& helmholtz, const Vector3d& k, cplx omega) {
  if (!helmholtz.allFinite()) {
    throw SingularityError("Helmholtz operator is not finite at " + describe(k, omega), k, omega);
  }
  const Eigen::VectorXd s = Eigen::JacobiSVD<CMatrix>(helmholtz).singularValues();
  if (!(s(2) > kOnShellTol * s(0))) {
    throw SingularityError("Helmholtz operator is singular (on-shell) at " + describe(k, omega) +
                               "; use a complex frequency or a lossy model",
                           k, omega);
  }
  GreenK out;
  out.helmholtz = helmholtz;
  out.g = helmholtz.fullPivLu().inverse();
  const CTensor3 id = CTensor3::Identity();
  out.right_residual = (helmholtz * out.g - id).norm() / id.norm();
  out.left_residual = (out.g * helmholtz - id).norm() / id.norm();
  return out;
}

Green1D solve_green_1d(const Nonlocal1DKernel& kern, cplx omega, const PhysicalConstants& pc) {
  const Helmholtz1D sys = nonlocal_1d_matrices(kern, omega, pc);
  const double h = kern.spacing();
  Eigen::PartialPivLU<CMatrix> lu(sys.h);
  if (!(lu.rcond() > 1e-14)) {
    throw SolverError("1-D Helmholtz matrix is singular at omega = " + std::to_string(omega.real()));
  }
  const CMatrix scaled_identity = CMatrix::Identity(kern.n, kern.n) / h;
  Green1D out;
  out.spacing = h;
  out.g = lu.solve(scaled_identity);
  out.residual = (sys.h * out.g - scaled_identity).norm() / scaled_identity.norm();
  return out;
}

GreenBlocks green_blocks_k(const CTensor3& g, const Vector3d& k, cplx omega,
                           const PhysicalConstants& pc) {
  const cplx iw_c = kI * omega / pc.c;
  const CTensor3 curl = curl_k(k);
  return {iw_c * g * iw_c, iw_c * g * (-curl), curl * g * iw_c, curl * g * (-curl)};
}

CMatrix6 green_block_matrix(const GreenBlocks& b, const ResponseSet& rs) {
  const CTensor3 mi = mu_inverse(rs);
  CMatrix6 out;
  out.topLeftCorner<3, 3>() = b.ee;
  out.topRightCorner<3, 3>() = b.em;
  out.bottomLeftCorner<3, 3>() = mi * (b.me - rs.zeta * b.ee);
  out.bottomRightCorner<3, 3>() = mi * (b.mm - rs.zeta * b.em) + CTensor3::Identity();
  return out;
}

}  // namespace mqed
