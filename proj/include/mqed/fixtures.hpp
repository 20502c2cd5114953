#pragma once

// Shipped medium models (scaled units, resonances near w = 1) and a random
// generator of passive bianisotropic response sets.

#include <random>
#include <string_view>
#include <vector>

#include "mqed/media.hpp"

namespace mqed::fixtures {

MediumModel vacuum();
// eps = 1 + 1/(1 - w^2 - 0.1 i w).
MediumModel lorentz_dielectric();
// mu = 1 + 0.5/(1 - w^2 - 0.1 i w).
MediumModel lorentz_magnetic();
// Uniaxial eps = diag(e1, e1, e2), mu = I.
MediumModel uniaxial_dielectric();
// Isotropic chiral: Lorentz eps and mu with Condon kappa (amplitude 0.02).
// Passive for w below ~35.
MediumModel chiral();
// Isotropic Tellegen: chi(w) I with chi(0) = 0.3. Reciprocal in bulk k space.
MediumModel tellegen();
// Tellegen with chi(w) diag(1, 1, 0), chi(0) = 0.3: violates Onsager in k space.
MediumModel tellegen_uniaxial();

struct Named {
  std::string_view file_stem;
  MediumModel (*make)();
};

// Every shipped fixture, in a fixed order.
const std::vector<Named>& all();

/// Random response set with ImH([[eps, xi], [zeta, mu]]) positive definite,
/// at a random frequency in [0.2, 3] (real) or in the upper half-plane.
ResponseSet random_passive_response(std::mt19937_64& rng, bool real_frequency = true);

Vector3d random_wavevector(std::mt19937_64& rng, double min_norm = 0.2, double max_norm = 3.0);

}  // namespace mqed::fixtures
