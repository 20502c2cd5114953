#include "mqed/conductivity.hpp"

#include <cmath>
#include <numbers>

namespace mqed {

namespace {

constexpr cplx kI{0.0, 1.0};

CTensor3 double_curl(const Vector3d& k) {
  return (k.squaredNorm() * Eigen::Matrix3d::Identity() - k * k.transpose()).cast<cplx>();
}

}  // namespace

CTensor3 local_conductivity_k(const ResponseSet& rs, const Vector3d& k,
                              const PhysicalConstants& pc) {
  const cplx w = rs.omega;
  const CTensor3 mi = mu_inverse(rs);
  const CTensor3 id = CTensor3::Identity();
  const CTensor3 curl = curl_k(k);
  const CTensor3 right_curl = -curl;

  // The magnetic term carries 1/w; the static limit of a magnetic medium is singular.
  CTensor3 q = -kI * pc.eps0 * w * (rs.eps - rs.xi * mi * rs.zeta - id);
  q += (curl * mi * rs.zeta + rs.xi * mi * right_curl) / pc.Z0;
  const CTensor3 magnetic = curl * (mi - id) * right_curl;
  if (magnetic.norm() > 0.0) q += magnetic / (kI * pc.mu0 * w);
  return q;
}

ConductivityK ConductivityK::local(const MediumModel& model, const PhysicalConstants& pc) {
  return ConductivityK(
      [model, pc](const Vector3d& k, cplx omega) {
        return local_conductivity_k(evaluate(model, omega), k, pc);
      },
      "local:" + model.name);
}

ConductivityK ConductivityK::hydrodynamic_drude(double plasma_frequency, double damping,
                                                double beta, const PhysicalConstants& pc) {
  if (!(damping > 0.0)) throw InvalidModel("hydrodynamic_drude: damping must be positive");
  if (!(beta >= 0.0)) throw InvalidModel("hydrodynamic_drude: beta must be non-negative");
  const double wp2 = plasma_frequency * plasma_frequency;
  return ConductivityK(
      [=](const Vector3d& k, cplx w) -> CTensor3 {
        const cplx sigma_t = kI * pc.eps0 * wp2 / (w + kI * damping);
        const double k2 = k.squaredNorm();
        if (k2 == 0.0) return sigma_t * CTensor3::Identity();
        const cplx sigma_l = kI * pc.eps0 * w * wp2 / (w * w + kI * damping * w - beta * beta * k2);
        const Eigen::Matrix3d pl = k * k.transpose() / k2;
        const Eigen::Matrix3d pt = Eigen::Matrix3d::Identity() - pl;
        return sigma_t * pt.cast<cplx>() + sigma_l * pl.cast<cplx>();
      },
      "hydrodynamic-drude");
}

CTensor3 helmholtz_generic_k(const CTensor3& q, const Vector3d& k, cplx omega,
                             const PhysicalConstants& pc) {
  return double_curl(k) - (omega * omega / (pc.c * pc.c)) * CTensor3::Identity() -
         kI * pc.mu0 * omega * q;
}

CTensor3 helmholtz_generic_k(const ConductivityK& q, const Vector3d& k, cplx omega,
                             const PhysicalConstants& pc) {
  return helmholtz_generic_k(q(k, omega), k, omega, pc);
}

CTensor3 helmholtz_bianisotropic_k(const ResponseSet& rs, const Vector3d& k,
                                   const PhysicalConstants& pc) {
  const cplx w_c = rs.omega / pc.c;
  const CTensor3 mi = mu_inverse(rs);
  const CTensor3 curl = curl_k(k);
  return curl * mi * curl - kI * w_c * curl * mi * rs.zeta + kI * w_c * rs.xi * mi * curl -
         w_c * w_c * (rs.eps - rs.xi * mi * rs.zeta);
}

cplx Nonlocal1DKernel::sigma(cplx omega, const PhysicalConstants& pc) const {
  return pc.eps0 * plasma_frequency * plasma_frequency / (damping - kI * omega);
}

void Nonlocal1DKernel::validate() const {
  if (n < 16) throw ResolutionError("nonlocal kernel: need N >= 16 grid points");
  if (!(length > 0.0)) throw InvalidInput("nonlocal kernel: box length must be positive");
  if (!(damping > 0.0)) throw InvalidModel("nonlocal kernel: Drude damping must be positive");
  if (!(plasma_frequency >= 0.0)) throw InvalidModel("nonlocal kernel: negative plasma frequency");
  if (!(smoothing >= 2.0 * spacing())) {
    throw ResolutionError("nonlocal kernel: smoothing length " + std::to_string(smoothing) +
                          " is below 2h = " + std::to_string(2.0 * spacing()));
  }
}

Eigen::MatrixXd Nonlocal1DKernel::gram() const {
  const double h = spacing();
  const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * smoothing);
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double d = (i - j) * h;
      g(i, j) = norm * std::exp(-d * d / (2.0 * smoothing * smoothing)) * h;
    }
  }
  return g;
}

CMatrix Nonlocal1DKernel::q_matrix(cplx omega, const PhysicalConstants& pc) const {
  validate();
  return sigma(omega, pc) * gram().cast<cplx>();
}

Helmholtz1D nonlocal_1d_matrices(const Nonlocal1DKernel& kern, cplx omega,
                                 const PhysicalConstants& pc) {
  kern.validate();
  const int n = kern.n;
  const double h = kern.spacing();
  const double inv_h2 = 1.0 / (h * h);

  Helmholtz1D out;
  out.q = kern.q_matrix(omega, pc);
  out.h = CMatrix::Zero(n, n);
  const cplx diag = 2.0 * inv_h2 - omega * omega / (pc.c * pc.c);
  for (int i = 0; i < n; ++i) {
    out.h(i, i) = diag;
    if (i + 1 < n) {
      out.h(i, i + 1) = -inv_h2;
      out.h(i + 1, i) = -inv_h2;
    }
  }
  out.h -= kI * pc.mu0 * omega * out.q;
  return out;
}

}  // namespace mqed
