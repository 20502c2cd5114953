#pragma once

#include <cmath>

namespace mqed {

// Vacuum constants. mu0 and Z0 are derived so that mu0 = 1/(eps0 c^2) and
// Z0 = sqrt(mu0/eps0) hold by construction.
struct PhysicalConstants {
  double c;
  double eps0;
  double mu0;
  double Z0;
  double hbar;

  static PhysicalConstants make(double c, double eps0, double hbar) {
    const double mu0 = 1.0 / (eps0 * c * c);
    return {c, eps0, mu0, std::sqrt(mu0 / eps0), hbar};
  }

  // c = eps0 = mu0 = hbar = 1.
  static PhysicalConstants scaled() { return make(1.0, 1.0, 1.0); }

  // CODATA 2018.
  static PhysicalConstants si() { return make(299792458.0, 8.8541878128e-12, 1.054571817e-34); }
};

}  // namespace mqed
