#include "mqed/media.hpp"

#include <cmath>
#include <limits>

namespace mqed {

namespace {

cplx resonant_denominator(const LorentzTerm& t, cplx omega) {
  return t.resonance * t.resonance - omega * omega - cplx(0.0, 1.0) * t.damping * omega;
}

bool is_scalar_multiple_of_identity(const CTensor3& a, double tol) {
  const cplx mean = a.trace() / 3.0;
  return (a - mean * CTensor3::Identity()).norm() <= tol;
}

}  // namespace

TensorDispersion TensorDispersion::isotropic(const TermList& t) { return diagonal(t, t, t); }

TensorDispersion TensorDispersion::diagonal(const TermList& xx, const TermList& yy,
                                            const TermList& zz) {
  TensorDispersion d;
  d.terms[0][0] = xx;
  d.terms[1][1] = yy;
  d.terms[2][2] = zz;
  return d;
}

bool TensorDispersion::empty() const {
  for (const auto& row : terms)
    for (const auto& list : row)
      if (!list.empty()) return false;
  return true;
}

cplx lorentz_response(const LorentzTerm& t, cplx omega) {
  return t.amplitude / resonant_denominator(t, omega);
}

// Odd in omega, so i*kappa obeys the reflection principle.
cplx condon_response(const LorentzTerm& t, cplx omega) {
  return t.amplitude * omega / resonant_denominator(t, omega);
}

CTensor3 evaluate_dispersion(const TensorDispersion& d, DispersionKind kind, cplx omega) {
  CTensor3 out = CTensor3::Zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (const auto& t : d.terms[i][j]) {
        out(i, j) += kind == DispersionKind::lorentz ? lorentz_response(t, omega)
                                                     : condon_response(t, omega);
      }
    }
  }
  return out;
}

void MediumModel::validate() const {
  auto check = [&](const TensorDispersion& d, const char* slot, bool nonneg_amplitude) {
    d.for_each_term([&](const LorentzTerm& t) {
      if (!std::isfinite(t.amplitude) || !std::isfinite(t.resonance) || !std::isfinite(t.damping))
        throw InvalidModel(std::string(slot) + ": non-finite term parameter");
      if (!(t.damping > 0.0))
        throw InvalidModel(std::string(slot) + ": damping must be strictly positive");
      if (t.resonance < 0.0) throw InvalidModel(std::string(slot) + ": negative resonance");
      if (nonneg_amplitude && t.amplitude < 0.0)
        throw InvalidModel(std::string(slot) + ": negative oscillator strength");
    });
  };
  check(eps, "eps", true);
  check(mu, "mu", true);
  check(kappa, "kappa", false);
  check(chi, "chi", false);
  if (!rotation.allFinite() ||
      (rotation.transpose() * rotation - Eigen::Matrix3d::Identity()).norm() > 1e-12) {
    throw InvalidModel("anisotropy: rotation matrix is not orthogonal");
  }
}

double MediumModel::lowest_resonance() const {
  double lo = std::numeric_limits<double>::infinity();
  auto visit = [&](const LorentzTerm& t) {
    if (t.resonance > 0.0) lo = std::min(lo, t.resonance);
  };
  for (const auto* d : {&eps, &mu, &kappa, &chi}) d->for_each_term(visit);
  return std::isfinite(lo) ? lo : 1.0;
}

double MediumModel::highest_resonance() const {
  double hi = 0.0;
  auto visit = [&](const LorentzTerm& t) { hi = std::max(hi, t.resonance); };
  for (const auto* d : {&eps, &mu, &kappa, &chi}) d->for_each_term(visit);
  return hi > 0.0 ? hi : 1.0;
}

double ResponseSet::norm() const {
  return std::sqrt(eps.squaredNorm() + xi.squaredNorm() + zeta.squaredNorm() +
                   mu.squaredNorm());
}

CTensor3 mu_inverse(const ResponseSet& rs) {
  const Eigen::VectorXd s = Eigen::JacobiSVD<CMatrix>(rs.mu).singularValues();
  if (!rs.mu.allFinite() || !(s(2) > 0.0) || s(0) / s(2) > 1e12) {
    throw InvalidModel("permeability is singular or ill-conditioned (cond > 1e12)");
  }
  return rs.mu.inverse();
}

ResponseSet evaluate(const MediumModel& model, cplx omega) {
  if (omega.imag() < 0.0) throw InvalidInput("evaluate: frequency must satisfy Im(omega) >= 0");
  const CTensor3 r = model.rotation.cast<cplx>();
  auto rotate = [&](const CTensor3& t) -> CTensor3 { return r * t * r.transpose(); };

  ResponseSet rs;
  rs.omega = omega;
  rs.eps = rotate(CTensor3::Identity() + evaluate_dispersion(model.eps, DispersionKind::lorentz, omega));
  rs.mu = rotate(CTensor3::Identity() + evaluate_dispersion(model.mu, DispersionKind::lorentz, omega));
  const CTensor3 kappa = rotate(evaluate_dispersion(model.kappa, DispersionKind::condon, omega));
  const CTensor3 chi = rotate(evaluate_dispersion(model.chi, DispersionKind::lorentz, omega));
  std::tie(rs.xi, rs.zeta) = compose_magnetoelectric(kappa, chi);

  if (!rs.eps.allFinite() || !rs.xi.allFinite() || !rs.zeta.allFinite() || !rs.mu.allFinite()) {
    throw InvalidModel("evaluate: non-finite response (frequency on a lossless pole?)");
  }
  mu_inverse(rs);
  return rs;
}

double schwarz_check(const MediumModel& model, std::span<const cplx> omega_grid) {
  return schwarz_check([&](cplx w) { return evaluate(model, w); }, omega_grid);
}

std::string_view to_string(MediumCategory c) {
  switch (c) {
    case MediumCategory::vacuum: return "vacuum";
    case MediumCategory::isotropic: return "isotropic";
    case MediumCategory::biisotropic: return "biisotropic";
    case MediumCategory::anisotropic: return "anisotropic";
    case MediumCategory::bianisotropic: return "bianisotropic";
  }
  return "unknown";
}

MediumClass classify(const ResponseSet& rs, double tol) {
  const double abs_tol = tol * rs.norm();
  const CTensor3 id = CTensor3::Identity();

  const bool no_me = rs.xi.norm() <= abs_tol && rs.zeta.norm() <= abs_tol;
  const bool eps_scalar = is_scalar_multiple_of_identity(rs.eps, abs_tol);
  const bool mu_scalar = is_scalar_multiple_of_identity(rs.mu, abs_tol);
  const bool me_scalar = is_scalar_multiple_of_identity(rs.xi, abs_tol) &&
                         is_scalar_multiple_of_identity(rs.zeta, abs_tol);

  MediumClass out;
  if (no_me && (rs.eps - id).norm() <= abs_tol && (rs.mu - id).norm() <= abs_tol) {
    out.category = MediumCategory::vacuum;
  } else if (no_me && eps_scalar && mu_scalar) {
    out.category = MediumCategory::isotropic;
  } else if (eps_scalar && mu_scalar && me_scalar) {
    out.category = MediumCategory::biisotropic;
  } else if (no_me) {
    out.category = MediumCategory::anisotropic;
  } else {
    out.category = MediumCategory::bianisotropic;
  }

  out.reciprocal = (rs.eps.transpose() - rs.eps).norm() <= abs_tol &&
                   (rs.xi.transpose() + rs.zeta).norm() <= abs_tol &&
                   (rs.mu.transpose() - rs.mu).norm() <= abs_tol;
  out.nonreciprocal_magnetoelectric = decompose_magnetoelectric(rs).chi.norm() > abs_tol;
  return out;
}

Magnetoelectric decompose_magnetoelectric(const ResponseSet& rs) {
  const CTensor3 xt = rs.xi.transpose();
  return {(rs.zeta - xt) / cplx(0.0, 2.0), (rs.zeta + xt) / 2.0};
}

std::pair<CTensor3, CTensor3> compose_magnetoelectric(const CTensor3& kappa, const CTensor3& chi) {
  const cplx i(0.0, 1.0);
  return {chi.transpose() - i * kappa.transpose(), chi + i * kappa};
}

}  // namespace mqed
