#pragma once

// Duality rotations. D(theta) = [[cos, sin], [-sin, cos]] mixes the members of
// a dual pair; on the response quadruple (eps, xi, zeta, mu) it acts as the
// congruence W -> D W D^T of the 6x6 constitutive matrix W = [[eps, xi],
// [zeta, mu]], whose 4x4 coefficient form is response_transform(theta).

#include <array>
#include <optional>
#include <span>

#include "mqed/green.hpp"

namespace mqed {

// A dual pair of c-number fields, e.g. (E, Z0 H) or (Z0 D, B).
struct FieldPair {
  Vector3c top = Vector3c::Zero();
  Vector3c bottom = Vector3c::Zero();

  Eigen::Matrix<cplx, 6, 1> stacked() const;
  static FieldPair from_stacked(const Eigen::Matrix<cplx, 6, 1>& v);
};

using TensorQuadruple = std::array<CTensor3, 4>;

Eigen::Matrix2d duality_matrix(double theta);

/// 4x4 coefficients of the transformed (eps, xi, zeta, mu).
Eigen::Matrix4d response_transform(double theta);

// Linear combination out[i] = sum_j m(i, j) in[j].
TensorQuadruple apply_transform(const Eigen::Matrix4d& m, const TensorQuadruple& in);

FieldPair rotate_fields(const FieldPair& fp, double theta);

ResponseSet rotate_responses(const ResponseSet& rs, double theta);

/// Map T(theta) = N*^-1 D(theta) N with N = [[I, xi], [0, mu]] and N* the
/// same built from the rotated responses. Throws DualitySingularity when the
/// rotated mu is singular.
CMatrix6 noise_transform(const ResponseSet& rs, double theta);

/// Transforms the noise pair (Z0 P_N, mu0 M_N).
FieldPair rotate_noise(const ResponseSet& rs, const FieldPair& noise, double theta);

/// T C T^dag for a covariance of the pair (Z0 P_N, mu0 M_N).
CMatrix6 rotate_noise_covariance(const ResponseSet& rs, const CMatrix6& covariance, double theta);

/// (Z0 D, B) = (1/c) [[eps, xi], [zeta, mu]] (E, Z0 H) + [[I, xi], [0, mu]] (Z0 P_N, mu0 M_N).
FieldPair constitutive_relation(const ResponseSet& rs, const FieldPair& e_h, const FieldPair& noise,
                                const PhysicalConstants& pc = PhysicalConstants::scaled());

/// Rotates (fields, responses, noise) jointly and returns the relative
/// mismatch of the constitutive relation in the rotated frame.
double constitutive_covariance_residual(const ResponseSet& rs, const FieldPair& e_h,
                                        const FieldPair& noise, double theta,
                                        const PhysicalConstants& pc = PhysicalConstants::scaled());

/// Vacuum-only law: (ee, em, me, mm + I) transforms with response_transform.
GreenBlocks rotate_green_blocks_vacuum(const GreenBlocks& blocks, double theta);

enum class DualitySymmetry { continuous, discrete };

std::string_view to_string(DualitySymmetry s);

struct SymmetryReport {
  DualitySymmetry symmetry = DualitySymmetry::discrete;
  MediumCategory category = MediumCategory::bianisotropic;  // at the first sample
  std::optional<double> witness;  // first angle where the class changes
  bool reciprocal = false;
  // Whether the reciprocity predicate survives rotation by pi/4.
  bool reciprocity_preserved_at_quarter_pi = false;
};

/// Closure of the medium class under rotation: continuous when it survives
/// pi/4 and pi/7 at every sample, discrete when it only survives n pi/2
/// (n = 1, 2, 3). The class is the structural category; for bianisotropic
/// reciprocal media, whose category is always closed, reciprocity as well.
/// Failure at a multiple of pi/2 is an InternalConsistencyError.
SymmetryReport symmetry_class(std::span<const ResponseSet> samples);
SymmetryReport symmetry_class(const MediumModel& model, std::span<const cplx> omega_samples);

}  // namespace mqed
