#include "mqed/duality.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace mqed {

namespace {

using Vector6c = Eigen::Matrix<cplx, 6, 1>;

CMatrix6 rotation6(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  CMatrix6 d = CMatrix6::Zero();
  d.topLeftCorner<3, 3>().diagonal().setConstant(c);
  d.topRightCorner<3, 3>().diagonal().setConstant(s);
  d.bottomLeftCorner<3, 3>().diagonal().setConstant(-s);
  d.bottomRightCorner<3, 3>().diagonal().setConstant(c);
  return d;
}

CMatrix6 noise_coupling(const ResponseSet& rs) {
  CMatrix6 n = CMatrix6::Zero();
  n.topLeftCorner<3, 3>().setIdentity();
  n.topRightCorner<3, 3>() = rs.xi;
  n.bottomRightCorner<3, 3>() = rs.mu;
  return n;
}

CMatrix6 constitutive_matrix(const ResponseSet& rs) {
  CMatrix6 w;
  w << rs.eps, rs.xi, rs.zeta, rs.mu;
  return w;
}

}  // namespace

Vector6c FieldPair::stacked() const {
  Vector6c v;
  v << top, bottom;
  return v;
}

FieldPair FieldPair::from_stacked(const Vector6c& v) { return {v.head<3>(), v.tail<3>()}; }

Eigen::Matrix2d duality_matrix(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2d d;
  d << c, s, -s, c;
  return d;
}

Eigen::Matrix4d response_transform(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double cc = c * c, ss = s * s, sc = s * c;
  Eigen::Matrix4d m;
  m << cc, sc, sc, ss,
       -sc, cc, -ss, sc,
       -sc, -ss, cc, sc,
       ss, -sc, -sc, cc;
  return m;
}

TensorQuadruple apply_transform(const Eigen::Matrix4d& m, const TensorQuadruple& in) {
  TensorQuadruple out;
  for (int i = 0; i < 4; ++i) {
    out[i] = CTensor3::Zero();
    for (int j = 0; j < 4; ++j) out[i] += m(i, j) * in[j];
  }
  return out;
}

FieldPair rotate_fields(const FieldPair& fp, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * fp.top + s * fp.bottom, -s * fp.top + c * fp.bottom};
}

ResponseSet rotate_responses(const ResponseSet& rs, double theta) {
  const TensorQuadruple q = apply_transform(response_transform(theta), {rs.eps, rs.xi, rs.zeta, rs.mu});
  ResponseSet out;
  out.eps = q[0];
  out.xi = q[1];
  out.zeta = q[2];
  out.mu = q[3];
  out.omega = rs.omega;
  return out;
}

CMatrix6 noise_transform(const ResponseSet& rs, double theta) {
  const ResponseSet rotated = rotate_responses(rs, theta);
  const double s_min = Eigen::JacobiSVD<CMatrix>(rotated.mu).singularValues().minCoeff();
  if (!(s_min > 1e-12 * rotated.norm())) {
    throw DualitySingularity("rotated permeability is singular at theta = " + std::to_string(theta));
  }
  CTensor3 mi;
  try {
    mi = mu_inverse(rotated);
  } catch (const InvalidModel&) {
    throw DualitySingularity("rotated permeability is singular at theta = " + std::to_string(theta));
  }
  CMatrix6 n_rot_inv = CMatrix6::Zero();
  n_rot_inv.topLeftCorner<3, 3>().setIdentity();
  n_rot_inv.topRightCorner<3, 3>() = -rotated.xi * mi;
  n_rot_inv.bottomRightCorner<3, 3>() = mi;
  return n_rot_inv * rotation6(theta) * noise_coupling(rs);
}

FieldPair rotate_noise(const ResponseSet& rs, const FieldPair& noise, double theta) {
  return FieldPair::from_stacked(noise_transform(rs, theta) * noise.stacked());
}

CMatrix6 rotate_noise_covariance(const ResponseSet& rs, const CMatrix6& covariance, double theta) {
  const CMatrix6 t = noise_transform(rs, theta);
  return t * covariance * t.adjoint();
}

FieldPair constitutive_relation(const ResponseSet& rs, const FieldPair& e_h, const FieldPair& noise,
                                const PhysicalConstants& pc) {
  return FieldPair::from_stacked(constitutive_matrix(rs) * e_h.stacked() / pc.c +
                                 noise_coupling(rs) * noise.stacked());
}

double constitutive_covariance_residual(const ResponseSet& rs, const FieldPair& e_h,
                                        const FieldPair& noise, double theta,
                                        const PhysicalConstants& pc) {
  const FieldPair d_b_rot = rotate_fields(constitutive_relation(rs, e_h, noise, pc), theta);
  const FieldPair predicted = constitutive_relation(
      rotate_responses(rs, theta), rotate_fields(e_h, theta), rotate_noise(rs, noise, theta), pc);
  return relative_residual((d_b_rot.stacked() - predicted.stacked()).norm(),
                           d_b_rot.stacked().norm());
}

GreenBlocks rotate_green_blocks_vacuum(const GreenBlocks& b, double theta) {
  const CTensor3 id = CTensor3::Identity();
  const TensorQuadruple q = apply_transform(response_transform(theta), {b.ee, b.em, b.me, b.mm + id});
  return {q[0], q[1], q[2], q[3] - id};
}

std::string_view to_string(DualitySymmetry s) {
  return s == DualitySymmetry::continuous ? "continuous" : "discrete";
}

SymmetryReport symmetry_class(std::span<const ResponseSet> samples) {
  if (samples.empty()) throw InvalidInput("symmetry_class: need at least one frequency sample");
  std::vector<MediumClass> base;
  base.reserve(samples.size());
  for (const auto& rs : samples) base.push_back(classify(rs));

  auto closed_at = [&](double theta) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const MediumClass rotated = classify(rotate_responses(samples[i], theta));
      if (rotated.category != base[i].category) return false;
      // the bianisotropic category is always closed; there reciprocity is the class
      if (base[i].category == MediumCategory::bianisotropic && base[i].reciprocal && !rotated.reciprocal) {
        return false;
      }
    }
    return true;
  };

  SymmetryReport report;
  report.category = base.front().category;
  report.reciprocal = base.front().reciprocal;
  report.reciprocity_preserved_at_quarter_pi =
      !report.reciprocal || classify(rotate_responses(samples.front(), std::numbers::pi / 4)).reciprocal;

  for (int n = 1; n <= 3; ++n) {
    if (!closed_at(n * std::numbers::pi / 2)) {
      throw InternalConsistencyError("symmetry_class: category not closed under rotation by " +
                                     std::to_string(n) + " pi/2");
    }
  }
  for (const double theta : {std::numbers::pi / 4, std::numbers::pi / 7}) {
    if (!closed_at(theta)) {
      report.symmetry = DualitySymmetry::discrete;
      report.witness = theta;
      return report;
    }
  }
  report.symmetry = DualitySymmetry::continuous;
  return report;
}

SymmetryReport symmetry_class(const MediumModel& model, std::span<const cplx> omega_samples) {
  std::vector<ResponseSet> samples;
  samples.reserve(omega_samples.size());
  for (const cplx w : omega_samples) samples.push_back(evaluate(model, w));
  return symmetry_class(samples);
}

}  // namespace mqed
