#pragma once

#include <array>
#include <concepts>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mqed/tensor.hpp"

namespace mqed {

// One resonant term a / (wT^2 - w^2 - i g w). For kappa the numerator carries
// an extra factor w (Condon form).
struct LorentzTerm {
  double amplitude = 0.0;
  double resonance = 0.0;
  double damping = 0.0;
};

using TermList = std::vector<LorentzTerm>;

// 3x3 grid of term lists; entry (i, j) sums into component (i, j).
struct TensorDispersion {
  std::array<std::array<TermList, 3>, 3> terms{};

  static TensorDispersion isotropic(const TermList& t);
  static TensorDispersion diagonal(const TermList& xx, const TermList& yy, const TermList& zz);

  bool empty() const;
  template <typename F>
  void for_each_term(F&& f) const {
    for (const auto& row : terms)
      for (const auto& list : row)
        for (const auto& t : list) f(t);
  }
};

enum class DispersionKind { lorentz, condon };

cplx lorentz_response(const LorentzTerm& t, cplx omega);
cplx condon_response(const LorentzTerm& t, cplx omega);

// Sum of terms per component; no background.
CTensor3 evaluate_dispersion(const TensorDispersion& d, DispersionKind kind, cplx omega);

/// Parametric causal model of a homogeneous local bianisotropic medium:
/// eps = I + sum Lorentz, mu = I + sum Lorentz, kappa = sum Condon,
/// chi = sum Lorentz, all rotated by a constant orthogonal matrix R.
struct MediumModel {
  std::string name = "unnamed";
  TensorDispersion eps;
  TensorDispersion mu;
  TensorDispersion kappa;
  TensorDispersion chi;
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();

  // Throws InvalidModel on non-positive damping, negative resonance, negative
  // eps/mu amplitude or a non-orthogonal rotation.
  void validate() const;

  double lowest_resonance() const;   // smallest positive resonance, 1 if none
  double highest_resonance() const;  // largest positive resonance, 1 if none
};

/// The four local responses of a medium at one (complex) frequency.
struct ResponseSet {
  CTensor3 eps = CTensor3::Identity();
  CTensor3 xi = CTensor3::Zero();
  CTensor3 zeta = CTensor3::Zero();
  CTensor3 mu = CTensor3::Identity();
  cplx omega{0.0, 0.0};

  static ResponseSet vacuum(cplx omega = {}) {
    ResponseSet rs;
    rs.omega = omega;
    return rs;
  }

  // Frobenius norm of the stacked (eps, xi, zeta, mu).
  double norm() const;
};

// mu^-1; throws InvalidModel when cond(mu) > 1e12.
CTensor3 mu_inverse(const ResponseSet& rs);

ResponseSet evaluate(const MediumModel& model, cplx omega);

/// max over the grid of ||R(-w*)^* - R(w)|| summed over the four slots.
template <typename Responses>
  requires std::invocable<Responses&, cplx>
double schwarz_check(Responses&& responses, std::span<const cplx> omega_grid) {
  double worst = 0.0;
  for (const cplx w : omega_grid) {
    const ResponseSet a = responses(w);
    const ResponseSet b = responses(-std::conj(w));
    const double r = std::sqrt((b.eps.conjugate() - a.eps).squaredNorm() +
                               (b.xi.conjugate() - a.xi).squaredNorm() +
                               (b.zeta.conjugate() - a.zeta).squaredNorm() +
                               (b.mu.conjugate() - a.mu).squaredNorm());
    worst = std::max(worst, r);
  }
  return worst;
}

double schwarz_check(const MediumModel& model, std::span<const cplx> omega_grid);

enum class MediumCategory { vacuum, isotropic, biisotropic, anisotropic, bianisotropic };

std::string_view to_string(MediumCategory c);

struct MediumClass {
  MediumCategory category = MediumCategory::bianisotropic;
  bool reciprocal = false;
  bool nonreciprocal_magnetoelectric = false;
};

inline constexpr double kClassifyTol = 1e-9;

/// Predicates are evaluated to tol * ||rs||.
MediumClass classify(const ResponseSet& rs, double tol = kClassifyTol);

struct Magnetoelectric {
  CTensor3 kappa;  // reciprocal (chirality) part
  CTensor3 chi;    // non-reciprocal part
};

/// kappa = (zeta - xi^T)/(2i), chi = (zeta + xi^T)/2.
Magnetoelectric decompose_magnetoelectric(const ResponseSet& rs);

/// Inverse of the above: xi = chi^T - i kappa^T, zeta = chi + i kappa.
std::pair<CTensor3, CTensor3> compose_magnetoelectric(const CTensor3& kappa, const CTensor3& chi);

}  // namespace mqed
